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

#include "schwinger/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace schwinger {

namespace {

void check_dense_limit(int qubits, int dense_limit) {
  if (qubits > dense_limit)
    throw std::runtime_error("dense dimension guard exceeded: " + std::to_string(qubits) +
                             " qubits > limit " + std::to_string(dense_limit));
}

int eta_for_cutoff(long long cutoff) { return floor_log2(2 * cutoff); }

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace

LatticeParams LatticeParams::unchecked(int n_sites, long long cutoff, double x, double mu) {
  if (n_sites < 2) throw std::invalid_argument("N must be at least 2");
  if (!is_power_of_two(cutoff)) throw std::invalid_argument("Lambda must be a power of 2");
  if (x < 0) throw std::invalid_argument("x must not be negative");
  if (mu < 0) throw std::invalid_argument("mu must be non-negative");
  LatticeParams p;
  p.n_sites = n_sites;
  p.cutoff = cutoff;
  p.eta = eta_for_cutoff(cutoff);
  p.x = x;
  p.mu = mu;
  return p;
}

LatticeParams validate_params(int n_sites, long long cutoff, double x, double mu) {
  if (n_sites % 2 != 0) throw std::invalid_argument("N must be even");
  if (!(x > 0)) throw std::invalid_argument("x must be positive");
  return LatticeParams::unchecked(n_sites, cutoff, x, mu);
}

std::vector<int> RegisterLayout::link_qubits(int r) const {
  std::vector<int> q(eta);
  for (int k = 0; k < eta; ++k) q[k] = link_qubit(r, k);
  return q;
}

RegisterLayout layout_for(const LatticeParams& p) { return RegisterLayout{p.n_sites, p.eta}; }

Matrix link_e_operator(int eta) {
  if (eta < 1) throw std::invalid_argument("eta must be >= 1");
  const Eigen::Index dim = Eigen::Index{1} << eta;
  const double lambda = static_cast<double>(dim / 2);
  Matrix e = Matrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) e(j, j) = static_cast<double>(j) - lambda;
  return e;
}

Matrix link_u_operator(int eta) {
  if (eta < 1) throw std::invalid_argument("eta must be >= 1");
  const Eigen::Index dim = Eigen::Index{1} << eta;
  Matrix u = Matrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) u((j + 1) % dim, j) = 1.0;
  return u;
}

std::vector<TermId> enumerate_terms(const LatticeParams& p) {
  std::vector<TermId> terms;
  for (int r = 1; r <= p.n_sites; ++r) {
    terms.push_back({TermId::kMass, r, 0});
    if (r <= p.n_sites - 1) {
      terms.push_back({TermId::kElectric, r, 0});
      for (int j = 1; j <= 4; ++j) terms.push_back({TermId::kHopping, r, j});
    }
  }
  return terms;
}

std::vector<int> term_support(const LatticeParams& p, const TermId& id) {
  const RegisterLayout layout = layout_for(p);
  switch (id.kind) {
    case TermId::kMass:
      if (id.site < 1 || id.site > p.n_sites) throw std::invalid_argument("mass term site out of range");
      return {layout.site_qubit(id.site)};
    case TermId::kElectric: {
      if (id.site < 1 || id.site > p.n_sites - 1)
        throw std::invalid_argument("electric term link out of range");
      return layout.link_qubits(id.site);
    }
    case TermId::kHopping: {
      if (id.site < 1 || id.site > p.n_sites - 1)
        throw std::invalid_argument("hopping term site out of range");
      if (id.component < 1 || id.component > 4)
        throw std::invalid_argument("hopping component out of range");
      std::vector<int> q = layout.link_qubits(id.site);
      q.push_back(layout.site_qubit(id.site));
      q.push_back(layout.site_qubit(id.site + 1));
      return q;
    }
  }
  throw std::logic_error("unreachable");
}

Matrix term_local_matrix(const LatticeParams& p, const TermId& id) {
  switch (id.kind) {
    case TermId::kMass: {
      const double sign = (id.site % 2 == 0) ? 1.0 : -1.0;
      return -(p.mu / 2.0) * sign * pauli_z();
    }
    case TermId::kElectric: {
      Matrix e = link_e_operator(p.eta);
      return e * e;
    }
    case TermId::kHopping: {
      const int eta = p.eta;
      const int n_local = eta + 2;
      const Eigen::Index link_dim = Eigen::Index{1} << eta;
      Matrix shift = link_u_operator(eta);
      Matrix a = embed_operator(pauli_x(), {0}, eta);
      Matrix b = embed_operator(pauli_y(), {0}, eta);
      Matrix boson(link_dim, link_dim);
      switch (id.component) {
        case 1: boson = a; break;
        case 2: boson = shift.adjoint() * a * shift; break;
        case 3: boson = shift.adjoint() * b * shift; break;
        case 4: boson = b; break;
        default: throw std::invalid_argument("hopping component out of range");
      }
      std::vector<int> ferm0 = {eta};
      std::vector<int> ferm1 = {eta + 1};
      const Matrix xf0 = embed_operator(pauli_x(), ferm0, n_local);
      const Matrix xf1 = embed_operator(pauli_x(), ferm1, n_local);
      const Matrix yf0 = embed_operator(pauli_y(), ferm0, n_local);
      const Matrix yf1 = embed_operator(pauli_y(), ferm1, n_local);
      const bool tilde = (id.component == 3 || id.component == 4);
      const Matrix ferm =
          tilde ? Matrix(xf0 * yf1 - yf0 * xf1) : Matrix(xf0 * xf1 + yf0 * yf1);
      std::vector<int> link_local(eta);
      for (int k = 0; k < eta; ++k) link_local[k] = k;
      return (p.x / 4.0) * embed_operator(boson, link_local, n_local) * ferm;
    }
  }
  throw std::logic_error("unreachable");
}

Matrix build_term(const LatticeParams& p, const TermId& id, int dense_limit) {
  check_dense_limit(p.total_qubits(), dense_limit);
  return embed_operator(term_local_matrix(p, id), term_support(p, id), p.total_qubits());
}

Matrix build_dense_hamiltonian(const LatticeParams& p, int dense_limit) {
  check_dense_limit(p.total_qubits(), dense_limit);
  const Eigen::Index dim = Eigen::Index{1} << p.total_qubits();
  Matrix h = Matrix::Zero(dim, dim);
  for (const TermId& id : enumerate_terms(p)) h += build_term(p, id, dense_limit);
  return h;
}

Matrix exact_propagator(const Matrix& h, double t) { return hermitian_propagator(h, t); }

namespace {

// Electric field value of link r read from a basis index; occupation of site r.
long long link_value(const LatticeParams& p, const RegisterLayout& layout, Eigen::Index idx,
                     int r) {
  long long j = 0;
  for (int k = 0; k < p.eta; ++k) j |= ((idx >> layout.link_qubit(r, k)) & 1) << k;
  return j - p.cutoff;
}

int site_occupation(const RegisterLayout& layout, Eigen::Index idx, int r) {
  return static_cast<int>((idx >> layout.site_qubit(r)) & 1);
}

}  // namespace

Matrix gauss_operator(const LatticeParams& p, int r, int dense_limit) {
  if (r < 1 || r > p.n_sites) throw std::invalid_argument("site out of range");
  check_dense_limit(p.total_qubits(), dense_limit);
  const RegisterLayout layout = layout_for(p);
  const Eigen::Index dim = Eigen::Index{1} << p.total_qubits();
  Matrix g = Matrix::Zero(dim, dim);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    const double e_right = (r <= p.n_sites - 1) ? static_cast<double>(link_value(p, layout, idx, r)) : 0.0;
    const double e_left = (r >= 2) ? static_cast<double>(link_value(p, layout, idx, r - 1)) : 0.0;
    const double rho = site_occupation(layout, idx, r) + (((r % 2 == 0) ? 1.0 : -1.0) - 1.0) / 2.0;
    g(idx, idx) = e_right - e_left - rho;
  }
  return g;
}

std::vector<double> pair_number_diagonal(const LatticeParams& p) {
  const RegisterLayout layout = layout_for(p);
  const Eigen::Index dim = Eigen::Index{1} << p.total_qubits();
  std::vector<double> diag(dim, 0.0);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    int count = 0;
    for (int r = 2; r <= p.n_sites; r += 2) count += site_occupation(layout, idx, r);
    diag[idx] = count;
  }
  return diag;
}

Matrix pair_number_operator(const LatticeParams& p, int dense_limit) {
  check_dense_limit(p.total_qubits(), dense_limit);
  const auto diag = pair_number_diagonal(p);
  const Eigen::Index dim = static_cast<Eigen::Index>(diag.size());
  Matrix np = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) np(i, i) = diag[i];
  return np;
}

Matrix fermion_number_operator(const LatticeParams& p, int dense_limit) {
  check_dense_limit(p.total_qubits(), dense_limit);
  const RegisterLayout layout = layout_for(p);
  const Eigen::Index dim = Eigen::Index{1} << p.total_qubits();
  Matrix nf = Matrix::Zero(dim, dim);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    int count = 0;
    for (int r = 1; r <= p.n_sites; ++r) count += site_occupation(layout, idx, r);
    nf(idx, idx) = count;
  }
  return nf;
}

Eigen::Index staggered_vacuum_index(const LatticeParams& p) {
  const RegisterLayout layout = layout_for(p);
  Eigen::Index idx = 0;
  for (int r = 1; r <= p.n_sites; r += 2) idx |= Eigen::Index{1} << layout.site_qubit(r);
  // Links at epsilon = 0 means j = Lambda on every link register.
  for (int r = 1; r <= p.n_sites - 1; ++r)
    for (int k = 0; k < p.eta; ++k)
      if ((p.cutoff >> k) & 1) idx |= Eigen::Index{1} << layout.link_qubit(r, k);
  return idx;
}

LocalOp term_exponential(const LatticeParams& p, const TermId& id, double t) {
  return LocalOp{hermitian_propagator(term_local_matrix(p, id), t), term_support(p, id)};
}

}  // namespace schwinger
