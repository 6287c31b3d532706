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

#ifndef SCHWINGER_BOUNDS_HPP
#define SCHWINGER_BOUNDS_HPP

#include <vector>

#include "schwinger/lattice.hpp"

namespace schwinger {

/// Per-site polynomial B(x, mu, Lambda) of the second-order step error bound;
/// the per-lattice aggregate is chi = N * B and the step bound is N t^3 B.
double per_site_bound_polynomial(const LatticeParams& p);

/// chi = N * B.
double lattice_bound_aggregate(const LatticeParams& p);

/// Closed-form bound for one of the eight nested-commutator patterns:
///  1: [[D_r, T_r^i], D_r]          2: [[T_r^i, D_s], T_t^j], s != r
///  3: [[T_r^i, T_t^j], D_s], s != r, t
///  4: [[T^i, T^j], T^k]            5: [[D_r, T_r^i], T_s^j]
///  6: [[D_r, T_r^i], D_{r+1}]      7: [[T_r^i, D_{r+1}], D_{r+1}]
///  8: [[T_r^i, T_{r+1}^j], D_{r+1}]
double commutator_bound_case(int case_id, const LatticeParams& p);

/// Spectral norm of [[a, b], c] via dense algebra.
double brute_force_nested_commutator(const Matrix& a, const Matrix& b, const Matrix& c);

/// N t^3 B: upper bound on ||V(t) - e^{-iHt}|| for the symmetric step.
double trotter_step_bound(const LatticeParams& p, double t);

struct StepsResult {
  long long steps = 0;
  double rho = 0.0;
};

/// Step count s = floor(N^{1/2} T^{3/2} Lambda x^{1/2} rho(delta)/delta^{1/2})
/// with rho(delta) = delta^{1/2}/(N^{1/2} T^{3/2} Lambda x^{1/2}) +
/// B^{1/2}/(Lambda x^{1/2}); guarantees s (T/s)^3 chi <= delta.
StepsResult required_steps(const LatticeParams& p, double total_time, double delta);

/// rho(delta) alone.
double step_rho(const LatticeParams& p, double total_time, double delta);

/// Real-valued (pre-floor) step count, for scaling studies and the printed
/// closed forms.
double required_steps_real(const LatticeParams& p, double total_time, double delta);

/// ||V(t) - e^{-iHt}|| with V built as the dense product of term exponentials.
double empirical_trotter_error(const LatticeParams& p, double t,
                               int dense_limit = kDefaultDenseLimit);

/// Step count minimizing K/s^2 + s*e for K = T^3 chi and per-step circuit
/// error e, scanning the integer neighbors of the stationary point.
long long neg_optimal_steps(const LatticeParams& p, double total_time,
                            double per_step_circuit_error);

/// One concrete nested-commutator instance of the step-error expansion.
struct CommutatorTriple {
  TermId a, b, c;
  int case_id = 0;      // which closed-form bound applies
  double weight = 0.0;  // 1/12 or 1/24
};

/// Every (existing) triple of the second-order expansion for this lattice,
/// with its case id; boundary instances that reference absent terms are
/// dropped. Mass ids with component -1 denote the full diagonal term
/// D_r = D_r^(M) + D_r^(E).
std::vector<CommutatorTriple> enumerate_error_triples(const LatticeParams& p);

/// Materializes a triple operand in the full register; resolves the
/// component -1 sentinel to mass plus electric.
Matrix triple_operand(const LatticeParams& p, const TermId& id,
                      int dense_limit = kDefaultDenseLimit);

}  // namespace schwinger

#endif  // SCHWINGER_BOUNDS_HPP
