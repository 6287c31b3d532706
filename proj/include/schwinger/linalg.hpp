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

#ifndef SCHWINGER_LINALG_HPP
#define SCHWINGER_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace schwinger {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kDefaultDenseLimit = 14;  // qubits

/// Floor of log2 for positive integers.
int floor_log2(long long n);

/// True if n is a power of two (n >= 1).
bool is_power_of_two(long long n);

bool is_hermitian(const Matrix& m, double tol = 1e-12);
bool is_unitary(const Matrix& m, double tol = 1e-12);

/// Largest singular value. Full SVD up to dim 4096, power iteration on the
/// Gram matrix above.
double spectral_norm(const Matrix& m);

/// Power-iteration estimate of the largest singular value, given the operator
/// and its adjoint as callables on vectors.
double spectral_norm_power(const std::function<Vector(const Vector&)>& apply,
                           const std::function<Vector(const Vector&)>& apply_adjoint,
                           Eigen::Index dim, int iters = 120, std::uint64_t seed = 7);

/// Power-iteration estimate applied to an explicit matrix.
double spectral_norm_power(const Matrix& m, int iters = 120, std::uint64_t seed = 7);

/// min over the trace-aligned global phase of ||u - e^{i phi} v||, with
/// phi* = arg tr(v^dag u) (0 when the trace vanishes). Zero exactly when the
/// two unitaries agree up to a global phase.
double distance_up_to_phase(const Matrix& u, const Matrix& v);

/// e^{-i h t} for Hermitian h, by eigendecomposition.
Matrix hermitian_propagator(const Matrix& h, double t);

/// Embed a k-qubit operator acting on the listed qubits into an n-qubit space.
/// qubits[i] is the global index carrying bit i of the local operator's index.
Matrix embed_operator(const Matrix& local, const std::vector<int>& qubits, int total_qubits);

/// Apply a k-qubit operator on the listed qubits of an n-qubit state, in place.
void apply_local_operator(Vector& state, const Matrix& local, const std::vector<int>& qubits);

/// A small unitary together with the qubits it acts on; a list of these is the
/// common currency between dense oracles and collapsed circuit blocks.
struct LocalOp {
  Matrix u;
  std::vector<int> qubits;
};

void apply_local_ops(Vector& state, const std::vector<LocalOp>& ops);
void apply_local_ops_adjoint(Vector& state, const std::vector<LocalOp>& ops);

}  // namespace schwinger

#endif  // SCHWINGER_LINALG_HPP
