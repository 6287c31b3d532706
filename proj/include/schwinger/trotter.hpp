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

#ifndef SCHWINGER_TROTTER_HPP
#define SCHWINGER_TROTTER_HPP

#include <vector>

#include "schwinger/circuit.hpp"
#include "schwinger/lattice.hpp"

namespace schwinger {

/// Two circuit realizations of the same step: the entangling-gate-limited
/// style (QFT incrementers, rotation-network electric step) and the
/// T-count-limited style (ancilla incrementers, squarer-based electric step).
enum class StepMode { kNeg, kFt };

/// Cyclic increment |j> -> |j+1 mod 2^eta> via single-qubit phases in Fourier
/// space. eta qubits, no ancillas, eta(eta-1) controlled phases (2 CNOTs
/// each), eta rotations.
Circuit build_incrementer_qft(int eta);

/// Cyclic increment via a carry chain: eta-2 Toffolis, eta-1 ancillas, all
/// ancillas returned to |0>. The AND uncomputations are measurement-assisted
/// and carry no Toffoli cost. Requires eta >= 2.
Circuit build_incrementer_ancilla(int eta);

/// Exact e^{-i E^2 t} on one link register, (eta+2)(eta-1)/2 CNOTs and
/// eta(eta+1)/2 rotations plus an explicit global phase.
Circuit build_electric_step_neg(int eta, double t);

/// In-place adder |a>|b>|0> -> |a>|a+b> with the n+1-bit sum in (b, carry-out).
/// Physical register: a[0..n-1], b[0..n-1], carry-out at 2n. One internal
/// ancilla.
Circuit build_adder(int n);

/// Out-of-place square |x>|0...0> -> |x>|x^2>. Physical register: x (eta
/// qubits) then the 2*eta-qubit result; work registers allocated internally.
Circuit build_squarer(int eta);

/// e^{-i E^2 t} via square-compute, phase rotations, square-uncompute.
/// 3*eta rotations, 3*eta+1 ancillas, explicit global phase.
Circuit build_electric_step_ft(int eta, double t);

/// The four-component hopping-step product on a standalone register
/// [link 0..eta-1, fermion pair at eta, eta+1], for coupling x and time t:
/// equals exp(-i t T4/2) exp(-i t T3/2) exp(-i t T2/2) exp(-i t T1/2).
Circuit build_hopping_local(int eta, double x, double t, StepMode mode);

/// Same, embedded at site r of the full register.
Circuit build_hopping_step(const LatticeParams& p, int r, double t, StepMode mode = StepMode::kNeg);

/// Exact e^{-i D_M(r) t}: a single Rz with angle -(-1)^r mu t on site r.
Circuit build_mass_step(const LatticeParams& p, int r, double t);

/// One block of the symmetric-product step: a standalone circuit plus the
/// global qubits it acts on.
struct TrotterBlockSpec {
  Circuit local;
  std::vector<int> qubits;
};

/// The step's blocks in application order: forward sweep r = 1..N-1 of
/// mass/electric halves then the hopping product, the full-angle mass turn at
/// site N, then the mirrored reverse sweep.
std::vector<TrotterBlockSpec> trotter_step_blocks(const LatticeParams& p, double t, StepMode mode);

/// The full second-order step V(t) as one circuit over the lattice register.
Circuit build_trotter_step(const LatticeParams& p, double t, StepMode mode = StepMode::kNeg);

/// The same step as local exponentials of the dense terms, for oracle use.
std::vector<LocalOp> trotter_step_local_ops(const LatticeParams& p, double t);

/// Dense V(t) for small systems.
Matrix trotter_step_dense(const LatticeParams& p, double t, int dense_limit = kDefaultDenseLimit);

}  // namespace schwinger

#endif  // SCHWINGER_TROTTER_HPP
