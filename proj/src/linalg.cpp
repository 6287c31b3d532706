// Copyright 2026 The schwinger-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "schwinger/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <random>
#include <stdexcept>

namespace schwinger {

int floor_log2(long long n) {
  if (n <= 0) throw std::invalid_argument("floor_log2: argument must be positive");
  int k = 0;
  while ((n >> 1) != 0) {
    n >>= 1;
    ++k;
  }
  return k;
}

bool is_power_of_two(long long n) { return n >= 1 && (n & (n - 1)) == 0; }

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  Matrix g = m.adjoint() * m;
  g.diagonal().array() -= 1.0;
  return g.cwiseAbs().maxCoeff() <= tol;
}

double spectral_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  if (m.rows() <= 4096 && m.cols() <= 4096) {
    if (m.rows() <= 32) {
      Eigen::JacobiSVD<Matrix> svd(m);
      return svd.singularValues()(0);
    }
    Eigen::BDCSVD<Matrix> svd(m);
    return svd.singularValues()(0);
  }
  return spectral_norm_power(m);
}

double spectral_norm_power(const std::function<Vector(const Vector&)>& apply,
                           const std::function<Vector(const Vector&)>& apply_adjoint,
                           Eigen::Index dim, int iters, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double best = 0.0;
  for (int restart = 0; restart < 3; ++restart) {
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    double nrm = v.norm();
    if (nrm == 0.0) continue;
    v /= nrm;
    double sigma2 = 0.0;
    for (int it = 0; it < iters; ++it) {
      Vector w = apply_adjoint(apply(v));
      sigma2 = w.norm();
      if (sigma2 == 0.0) break;
      v = w / sigma2;
    }
    best = std::max(best, std::sqrt(sigma2));
  }
  return best;
}

double spectral_norm_power(const Matrix& m, int iters, std::uint64_t seed) {
  return spectral_norm_power([&](const Vector& v) { return Vector(m * v); },
                             [&](const Vector& v) { return Vector(m.adjoint() * v); }, m.cols(),
                             iters, seed);
}

double distance_up_to_phase(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("distance_up_to_phase: dimension mismatch");
  const Complex tr = (v.adjoint() * u).trace();
  const double phi = (std::abs(tr) == 0.0) ? 0.0 : std::arg(tr);
  return spectral_norm(u - std::polar(1.0, phi) * v);
}

Matrix hermitian_propagator(const Matrix& h, double t) {
  if (!is_hermitian(h, 1e-10))
    throw std::invalid_argument("hermitian_propagator: operator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& vals = es.eigenvalues();
  const Matrix& vecs = es.eigenvectors();
  Vector phases(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) phases(i) = std::polar(1.0, -vals(i) * t);
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

void apply_local_operator(Vector& state, const Matrix& local, const std::vector<int>& qubits) {
  const int k = static_cast<int>(qubits.size());
  const Eigen::Index ld = Eigen::Index{1} << k;
  if (local.rows() != ld || local.cols() != ld)
    throw std::invalid_argument("apply_local_operator: operator/qubit-count mismatch");
  const Eigen::Index dim = state.size();
  // Enumerate the non-target bit patterns by expanding a compact counter.
  std::vector<int> sorted = qubits;
  std::sort(sorted.begin(), sorted.end());
  const Eigen::Index rest_count = dim >> k;
  Vector in(ld), out(ld);
  for (Eigen::Index rest = 0; rest < rest_count; ++rest) {
    // Expand `rest` by inserting zero bits at each target qubit position.
    Eigen::Index base = rest;
    for (int q : sorted) {
      const Eigen::Index low_mask = (Eigen::Index{1} << q) - 1;
      base = ((base & ~low_mask) << 1) | (base & low_mask);
    }
    for (Eigen::Index li = 0; li < ld; ++li) {
      Eigen::Index idx = base;
      for (int b = 0; b < k; ++b)
        if ((li >> b) & 1) idx |= (Eigen::Index{1} << qubits[b]);
      in(li) = state(idx);
    }
    out.noalias() = local * in;
    for (Eigen::Index li = 0; li < ld; ++li) {
      Eigen::Index idx = base;
      for (int b = 0; b < k; ++b)
        if ((li >> b) & 1) idx |= (Eigen::Index{1} << qubits[b]);
      state(idx) = out(li);
    }
  }
}

Matrix embed_operator(const Matrix& local, const std::vector<int>& qubits, int total_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << total_qubits;
  Matrix full = Matrix::Zero(dim, dim);
  const int k = static_cast<int>(qubits.size());
  const Eigen::Index ld = Eigen::Index{1} << k;
  if (local.rows() != ld || local.cols() != ld)
    throw std::invalid_argument("embed_operator: operator/qubit-count mismatch");
  std::vector<int> sorted = qubits;
  std::sort(sorted.begin(), sorted.end());
  const Eigen::Index rest_count = dim >> k;
  for (Eigen::Index rest = 0; rest < rest_count; ++rest) {
    Eigen::Index base = rest;
    for (int q : sorted) {
      const Eigen::Index low_mask = (Eigen::Index{1} << q) - 1;
      base = ((base & ~low_mask) << 1) | (base & low_mask);
    }
    for (Eigen::Index lr = 0; lr < ld; ++lr) {
      Eigen::Index row = base;
      for (int b = 0; b < k; ++b)
        if ((lr >> b) & 1) row |= (Eigen::Index{1} << qubits[b]);
      for (Eigen::Index lc = 0; lc < ld; ++lc) {
        if (local(lr, lc) == Complex(0.0, 0.0)) continue;
        Eigen::Index col = base;
        for (int b = 0; b < k; ++b)
          if ((lc >> b) & 1) col |= (Eigen::Index{1} << qubits[b]);
        full(row, col) = local(lr, lc);
      }
    }
  }
  return full;
}

void apply_local_ops(Vector& state, const std::vector<LocalOp>& ops) {
  for (const auto& op : ops) apply_local_operator(state, op.u, op.qubits);
}

void apply_local_ops_adjoint(Vector& state, const std::vector<LocalOp>& ops) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    apply_local_operator(state, Matrix(it->u.adjoint()), it->qubits);
}

}  // namespace schwinger
