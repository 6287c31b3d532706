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

#ifndef SCHWINGER_RESOURCES_HPP
#define SCHWINGER_RESOURCES_HPP

#include <string>

#include "schwinger/lattice.hpp"
#include "schwinger/trotter.hpp"

namespace schwinger {

/// T gates per Toffoli with one reusable ancilla.
inline constexpr double kTGatesPerToffoli = 4.0;

/// Expected T gates to synthesize one z rotation to spectral error delta.
inline constexpr double kRotationSynthesisFactor = 1.15;

/// CNOTs for one full second-order step in the entangling-gate cost model:
/// (N-1)(9 eta^2 - 7 eta + 34).
long long cnot_per_trotter_step(const LatticeParams& p);

/// Expected T count of one four-component hopping product at synthesis budget
/// delta: 8(log2 Lambda - 1) + 9.2 log2(16/delta). Negative log terms are
/// clamped at zero (with *clamped set) since the formula is an upper bound
/// meant for small delta; one ancilla is implied.
double tcount_hopping(long long cutoff, double delta, bool* clamped = nullptr);

/// Expected T count of one mass rotation: 1.15 log2(2/delta).
double tcount_mass(double delta, bool* clamped = nullptr);

struct SquarerCost {
  long long toffolis = 0;
  int ancillas = 0;
};

/// Toffoli/ancilla budget of the out-of-place squarer as quoted for the
/// logarithmic-depth-adder realization: (eta-1)(12 eta - 3 floor(log eta) - 14)
/// Toffolis, at most 5 eta - floor(log eta) - 1 ancillas.
SquarerCost toffoli_squarer(int eta);

/// Expected T count of the squarer-based electric step at budget delta:
/// 4.45 eta log2(3 eta/delta) + 8(eta-1)(12 eta - 3 floor(log eta) - 14).
double tcount_electric_ft(int eta, double delta, bool* clamped = nullptr);

struct TrotterStepCost {
  double expected_t = 0.0;
  double lambda = 0.0;
  long long qubits = 0;
};

/// Expected T count of one full step at synthesis budget delta_circ, as the
/// per-term sum with every synthesized unit at budget delta_circ/(6N-5);
/// qubits = N(eta+1) + 4 eta - floor(log eta) - 1.
TrotterStepCost tcount_trotter_step(const LatticeParams& p, double delta_circ);

/// The same count in its factored (Neta^2 + Neta ln((6N-5)/delta)) * lambda
/// form; equal to the direct sum by construction (without clamping).
double tcount_trotter_step_lambda_form(const LatticeParams& p, double delta_circ);

struct CensusCheck {
  bool passed = true;
  std::string detail;
};

/// Builds the step circuit and checks its census against the closed forms:
/// the NEG CNOT census against the step bound (exact for this construction),
/// and the FT Toffoli census against the incrementer/squarer sub-censuses.
CensusCheck census_matches_formulas(const LatticeParams& p, StepMode mode);

}  // namespace schwinger

#endif  // SCHWINGER_RESOURCES_HPP
