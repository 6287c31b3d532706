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

#ifndef SCHWINGER_COST_HPP
#define SCHWINGER_COST_HPP

#include <string>
#include <vector>

#include "schwinger/bounds.hpp"
#include "schwinger/measure.hpp"
#include "schwinger/resources.hpp"

namespace schwinger {

struct CostReport {
  double expected_t = 0.0;
  double cnots = 0.0;
  double toffolis = 0.0;
  long long ancillas = 0;
  long long total_qubits = 0;
  double trotter_steps = 0.0;
  double shots_or_queries = 0.0;
  std::string scheme;
};

/// Full cost of estimating the mean pair density by direct sampling:
/// s steps at Trotter budget tau*eps*sqrt(kappa), synthesis budget
/// (1-tau)*eps*sqrt(kappa)/s per step, N_shots repetitions. `prefloor`
/// evaluates s and N_shots as reals, matching the printed closed form.
CostReport ft_sampling_cost(const LatticeParams& p, double total_time, double eps, double kappa,
                            double tau, bool prefloor = false);

/// The kappa = tau = 1/2 closed form of the sampling cost.
double ft_sampling_closed_form(const LatticeParams& p, double total_time, double eps);

/// Full cost of the amplitude-estimation scheme: Trotter budget eps/16,
/// synthesis eps/(16 s), 2*N_query*s controlled steps plus the auxiliary
/// estimation T gates.
CostReport ft_ae_cost(const LatticeParams& p, double total_time, double eps,
                      bool prefloor = false);

/// Time evolution alone to total error delta, evenly split between Trotter
/// (delta/2) and synthesis (delta/(2s)).
CostReport ft_evolution_cost(const LatticeParams& p, double total_time, double delta,
                             bool prefloor = false);

/// The printed closed form of the evolution cost.
double ft_evolution_closed_form(const LatticeParams& p, double total_time, double delta);

struct ErrorSplitResult {
  double kappa = 0.5;
  double tau = 0.5;
  double cost = 0.0;
  double baseline = 0.0;  // cost at kappa = tau = 1/2
};

/// Deterministic grid search (0.01 steps over (0,1)^2) plus coordinate
/// refinement to 1e-4 of the sampling cost over the error split.
ErrorSplitResult optimize_error_split(const LatticeParams& p, double total_time, double eps);

struct NegResult {
  double eps_min = 0.0;        // smallest achievable rms error bound
  double delta_trot_opt = 0.0; // optimal Trotter budget
  double gamma = 0.0;          // constant part of rho
  double n_g = 0.0;            // CNOTs per shot at the optimum
};

/// Minimum achievable rms error under per-CNOT diamond-norm error delta_g,
/// with the optimal Trotter-error choice and the CNOT count per shot.
NegResult neg_min_rms_error(const LatticeParams& p, double total_time, double delta_g);

/// The objective delta_g * (CNOT count at Trotter budget delta) + delta/2
/// whose stationary point is delta_trot_opt.
double neg_objective(const LatticeParams& p, double total_time, double delta_g, double delta);

struct NegTableCell {
  double x = 0.0;
  double delta_g = 0.0;
  double eps_min_sq = 0.0;
  double n_g = 0.0;
  bool out_of_range = false;  // eps_min^2 beyond the observable's range [0, 1/4]
};

/// The fixed small-lattice error table: eta = N = 2, mu = 1, T = 10/x over
/// the given coupling and gate-error grids.
std::vector<NegTableCell> neg_error_table(const std::vector<double>& xs,
                                          const std::vector<double>& delta_gs);

struct LiebRobinsonResult {
  double xi = 0.0;
  double eta_lr = 0.0;
  double block_argument = 0.0;  // signed value inside the absolute value
  long long block_length = 0;   // l
  long long n_eff = 0;
  bool flagged = false;  // the absolute-value argument changed sign
  CostReport scaled_cost;
};

/// Sublattice sizing from the locality bound: xi = (8x + mu/2 + Lambda^2) e,
/// eta_lr = (mu + 4 Lambda)/(mu + 2 Lambda^2), and the estimation cost with
/// N replaced by N_eff.
LiebRobinsonResult lieb_robinson_block(const LatticeParams& p, double total_time, double delta);

}  // namespace schwinger

#endif  // SCHWINGER_COST_HPP
