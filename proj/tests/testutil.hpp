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

#ifndef SCHWINGER_TESTS_TESTUTIL_HPP
#define SCHWINGER_TESTS_TESTUTIL_HPP

#include <random>

#include "schwinger/circuit.hpp"
#include "schwinger/lattice.hpp"
#include "schwinger/linalg.hpp"
#include "schwinger/trotter.hpp"

namespace schwinger::test {

inline Vector basis_state(int qubits, Eigen::Index index) {
  Vector v = Vector::Zero(Eigen::Index{1} << qubits);
  v(index) = 1.0;
  return v;
}

inline Vector random_state(int qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Vector v(Eigen::Index{1} << qubits);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

/// A random product of single-qubit rotations and a CNOT ring, as an exact
/// circuit; useful when a test needs both a state and its preparation.
inline Circuit random_prep_circuit(int qubits, std::uint64_t seed, int layers = 3) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  Circuit c(qubits);
  for (int layer = 0; layer < layers; ++layer) {
    for (int q = 0; q < qubits; ++q) {
      c.h(q);
      c.rz(q, angle(rng));
    }
    if (qubits > 1)
      for (int q = 0; q < qubits; ++q) c.cnot(q, (q + 1) % qubits);
  }
  return c;
}

/// Dense unitary of a local-operator product (applied left to right).
inline Matrix local_ops_to_unitary(const std::vector<LocalOp>& ops, int qubits) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  Matrix u = Matrix::Identity(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Vector v = u.col(col);
    apply_local_ops(v, ops);
    u.col(col) = v;
  }
  return u;
}

/// Matrix-free distance-up-to-phase between a circuit and a local-operator
/// product: small registers go through the dense path, larger ones use a
/// reference-state phase and power iteration on the difference operator.
inline double circuit_vs_ops_distance(const Circuit& c, const std::vector<LocalOp>& ops,
                                      std::uint64_t seed = 11) {
  const int n = c.num_physical();
  if (n <= 10 && c.ancilla_high_water() + n <= kDefaultDenseLimit) {
    return distance_up_to_phase(circuit_to_unitary(c), local_ops_to_unitary(ops, n));
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Vector ref = random_state(n, seed);
  const Vector u_ref = apply_circuit(c, ref);
  Vector v_ref = ref;
  apply_local_ops(v_ref, ops);
  const Complex overlap = v_ref.dot(u_ref);  // <v|u>
  const double phi = (std::abs(overlap) == 0.0) ? 0.0 : std::arg(overlap);
  const Complex phase = std::polar(1.0, phi);
  const Circuit c_inv = c.inverse();
  auto apply = [&](const Vector& v) {
    Vector a = apply_circuit(c, v);
    Vector b = v;
    apply_local_ops(b, ops);
    return Vector(a - phase * b);
  };
  auto apply_adjoint = [&](const Vector& v) {
    Vector a = apply_circuit(c_inv, v);
    Vector b = v;
    apply_local_ops_adjoint(b, ops);
    return Vector(a - std::conj(phase) * b);
  };
  return spectral_norm_power(apply, apply_adjoint, dim, 60, seed);
}

/// Collapses each block to its dense local unitary (evaluating its ancillas
/// standalone), so wide-ancilla steps can be applied at physical width.
inline std::vector<LocalOp> collapse_blocks(const std::vector<TrotterBlockSpec>& blocks) {
  std::vector<LocalOp> ops;
  ops.reserve(blocks.size());
  for (const TrotterBlockSpec& block : blocks)
    ops.push_back({circuit_to_unitary(block.local), block.qubits});
  return ops;
}

}  // namespace schwinger::test

#endif  // SCHWINGER_TESTS_TESTUTIL_HPP
