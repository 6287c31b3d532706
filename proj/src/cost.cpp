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

#include "schwinger/cost.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace schwinger {

namespace {

constexpr double kPi = M_PI;

double lambda_value(const LatticeParams& p, double delta) {
  const double denom = p.n_sites * static_cast<double>(p.eta) * p.eta +
                       p.n_sites * p.eta * std::log((6.0 * p.n_sites - 5.0) / delta);
  return tcount_trotter_step_lambda_form(p, delta) / denom;
}

void check_unit_interval(double v, const char* name) {
  if (!(v > 0.0) || !(v < 1.0))
    throw std::invalid_argument(std::string(name) + " must be in (0,1)");
}

}  // namespace

CostReport ft_sampling_cost(const LatticeParams& p, double total_time, double eps, double kappa,
                            double tau, bool prefloor) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  check_unit_interval(kappa, "kappa");
  check_unit_interval(tau, "tau");
  const double state_budget = eps * std::sqrt(kappa);
  const double delta_trot = tau * state_budget;
  double steps = prefloor ? required_steps_real(p, total_time, delta_trot)
                          : static_cast<double>(required_steps(p, total_time, delta_trot).steps);
  const double delta_circ = (1.0 - tau) * state_budget / steps;
  const TrotterStepCost per_step = tcount_trotter_step(p, delta_circ);
  const ShotsResult shots = shots_required(eps, kappa);
  const double n_shots =
      prefloor ? shots.nu / (4.0 * eps * eps * (1.0 - kappa)) : static_cast<double>(shots.n_shots);
  CostReport report;
  report.expected_t = steps * per_step.expected_t * n_shots;
  report.total_qubits = per_step.qubits;
  report.ancillas = per_step.qubits - p.total_qubits();
  report.trotter_steps = steps;
  report.shots_or_queries = n_shots;
  report.scheme = "ft-sampling";
  return report;
}

double ft_sampling_closed_form(const LatticeParams& p, double total_time, double eps) {
  const double n = p.n_sites;
  const double eta = p.eta;
  const double lambda_cut = static_cast<double>(p.cutoff);
  const double rho = step_rho(p, total_time, eps / std::sqrt(8.0));
  const double t32 = std::pow(total_time, 1.5);
  const double log_arg = std::pow(2.0, 2.25) * std::sqrt(n) * (6.0 * n - 5.0) * t32 * lambda_cut *
                         std::sqrt(p.x) * rho / std::pow(eps, 1.5);
  const double gamma = (eta + std::log(log_arg)) / std::log(log_arg);
  const double delta_circ =
      std::pow(eps, 1.5) / (std::pow(2.0, 2.25) * std::sqrt(n) * t32 * lambda_cut * std::sqrt(p.x) * rho);
  const double nu = 4.0 * eps * eps * 0.5 + 1.0;
  return std::pow(n * total_time, 1.5) * lambda_cut * eta * std::sqrt(p.x) /
         (std::pow(2.0, 0.25) * std::pow(eps, 2.5)) * std::log(log_arg) * gamma * rho *
         lambda_value(p, delta_circ) * nu;
}

CostReport ft_ae_cost(const LatticeParams& p, double total_time, double eps, bool prefloor) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  const double delta_trot = eps / 16.0;
  double steps = prefloor ? required_steps_real(p, total_time, delta_trot)
                          : static_cast<double>(required_steps(p, total_time, delta_trot).steps);
  const double delta_circ = eps / (16.0 * steps);
  const TrotterStepCost per_step = tcount_trotter_step(p, delta_circ);
  const double queries = ae_query_count(eps);
  const int m = static_cast<int>(std::ceil(std::log2(p.n_sites / 2.0)));
  const double aux = ae_tgate_count(eps, m);
  CostReport report;
  report.expected_t = 2.0 * queries * steps * per_step.expected_t + aux;
  report.trotter_steps = steps;
  report.shots_or_queries = queries;
  const double log_l = std::log2(2.0 * std::sqrt(2.0) * kPi / eps + 4.0);
  report.total_qubits = static_cast<long long>(p.n_sites) * (p.eta + 1) + 3LL * p.eta -
                        floor_log2(2LL * p.eta - 1) + 1 + 2LL * m +
                        static_cast<long long>(std::ceil(log_l));
  report.ancillas = report.total_qubits - p.total_qubits();
  report.scheme = "ft-ae";
  return report;
}

CostReport ft_evolution_cost(const LatticeParams& p, double total_time, double delta,
                             bool prefloor) {
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  double steps = prefloor ? required_steps_real(p, total_time, delta / 2.0)
                          : static_cast<double>(required_steps(p, total_time, delta / 2.0).steps);
  const double delta_circ = delta / (2.0 * steps);
  const TrotterStepCost per_step = tcount_trotter_step(p, delta_circ);
  CostReport report;
  report.expected_t = steps * per_step.expected_t;
  report.total_qubits = per_step.qubits;
  report.ancillas = per_step.qubits - p.total_qubits();
  report.trotter_steps = steps;
  report.shots_or_queries = 1.0;
  report.scheme = "ft-evolve";
  return report;
}

double ft_evolution_closed_form(const LatticeParams& p, double total_time, double delta) {
  const double n = p.n_sites;
  const double eta = p.eta;
  const double lambda_cut = static_cast<double>(p.cutoff);
  const double rho = step_rho(p, total_time, delta / 2.0);
  const double t32 = std::pow(total_time, 1.5);
  const double log_arg = std::pow(2.0, 1.5) * (6.0 * n - 5.0) * std::sqrt(n) * t32 * lambda_cut *
                         std::sqrt(p.x) * rho / std::pow(delta, 1.5);
  const double gamma_prime = (eta + std::log(log_arg)) / std::log(log_arg);
  const double delta_circ =
      std::pow(delta, 1.5) / (std::pow(2.0, 1.5) * std::sqrt(n) * t32 * lambda_cut * std::sqrt(p.x) * rho);
  return std::pow(n, 1.5) * t32 * lambda_cut * eta * std::sqrt(p.x) / std::sqrt(delta / 2.0) *
         std::log(log_arg) * gamma_prime * rho * lambda_value(p, delta_circ);
}

ErrorSplitResult optimize_error_split(const LatticeParams& p, double total_time, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  auto cost_at = [&](double kappa, double tau) {
    return ft_sampling_cost(p, total_time, eps, kappa, tau).expected_t;
  };
  ErrorSplitResult result;
  result.baseline = cost_at(0.5, 0.5);
  double best = std::numeric_limits<double>::infinity();
  double best_kappa = 0.5, best_tau = 0.5;
  for (int i = 1; i <= 99; ++i) {
    for (int j = 1; j <= 99; ++j) {
      const double kappa = i / 100.0;
      const double tau = j / 100.0;
      const double c = cost_at(kappa, tau);
      if (c < best) {
        best = c;
        best_kappa = kappa;
        best_tau = tau;
      }
    }
  }
  // Coordinate refinement around the grid optimum, down to 1e-4 resolution.
  for (double step : {1e-3, 1e-4}) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = -10; i <= 10; ++i) {
        const double kappa = std::clamp(best_kappa + i * step, 1e-4, 1.0 - 1e-4);
        const double c = cost_at(kappa, best_tau);
        if (c < best) {
          best = c;
          best_kappa = kappa;
        }
      }
      for (int j = -10; j <= 10; ++j) {
        const double tau = std::clamp(best_tau + j * step, 1e-4, 1.0 - 1e-4);
        const double c = cost_at(best_kappa, tau);
        if (c < best) {
          best = c;
          best_tau = tau;
        }
      }
    }
  }
  result.kappa = best_kappa;
  result.tau = best_tau;
  result.cost = best;
  return result;
}

double neg_objective(const LatticeParams& p, double total_time, double delta_g, double delta) {
  const double cnot_factor = std::sqrt(static_cast<double>(p.n_sites)) * (p.n_sites - 1) *
                             std::pow(total_time, 1.5) * static_cast<double>(p.cutoff) *
                             std::sqrt(p.x) * (9.0 * p.eta * p.eta - 7.0 * p.eta + 34.0);
  return delta_g * cnot_factor * step_rho(p, total_time, delta) / std::sqrt(delta) + delta / 2.0;
}

NegResult neg_min_rms_error(const LatticeParams& p, double total_time, double delta_g) {
  if (!(delta_g > 0)) throw std::invalid_argument("delta_g must be positive");
  NegResult r;
  const double lambda_cut = static_cast<double>(p.cutoff);
  r.gamma = std::sqrt(per_site_bound_polynomial(p)) / (lambda_cut * std::sqrt(p.x));
  const double inner = delta_g * r.gamma * std::sqrt(static_cast<double>(p.n_sites)) *
                       (p.n_sites - 1) * lambda_cut * std::sqrt(p.x) *
                       (9.0 * p.eta * p.eta - 7.0 * p.eta + 34.0);
  r.delta_trot_opt = total_time * std::pow(inner, 2.0 / 3.0);
  r.eps_min = 1.5 * total_time * std::pow(inner, 2.0 / 3.0) + delta_g * (p.n_sites - 1) * r.gamma;
  r.n_g = std::sqrt(static_cast<double>(p.n_sites)) * std::pow(total_time, 1.5) * lambda_cut *
          std::sqrt(p.x) * (p.n_sites - 1) * (9.0 * p.eta * p.eta - 7.0 * p.eta + 34.0) *
          step_rho(p, total_time, r.delta_trot_opt) / std::sqrt(r.delta_trot_opt);
  return r;
}

std::vector<NegTableCell> neg_error_table(const std::vector<double>& xs,
                                          const std::vector<double>& delta_gs) {
  std::vector<NegTableCell> cells;
  for (double x : xs) {
    const LatticeParams p = validate_params(2, 2, x, 1.0);
    const double total_time = 10.0 / x;
    for (double dg : delta_gs) {
      NegTableCell cell;
      cell.x = x;
      cell.delta_g = dg;
      if (dg == 0.0) {
        cell.eps_min_sq = 0.0;
        cell.n_g = std::numeric_limits<double>::infinity();
      } else {
        const NegResult r = neg_min_rms_error(p, total_time, dg);
        cell.eps_min_sq = r.eps_min * r.eps_min;
        cell.n_g = r.n_g;
        cell.out_of_range = cell.eps_min_sq > 0.25;
      }
      cells.push_back(cell);
    }
  }
  return cells;
}

LiebRobinsonResult lieb_robinson_block(const LatticeParams& p, double total_time, double delta) {
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  LiebRobinsonResult r;
  const double lambda_cut = static_cast<double>(p.cutoff);
  r.xi = (8.0 * p.x + p.mu / 2.0 + lambda_cut * lambda_cut) * std::exp(1.0);
  r.eta_lr = (p.mu + 4.0 * lambda_cut) / (p.mu + 2.0 * lambda_cut * lambda_cut);
  const double travel = r.xi * total_time;
  const double common = std::log(2.0 * travel / std::sqrt(r.eta_lr)) + travel * std::sqrt(8.0 * r.eta_lr);
  r.block_argument = std::log(std::sqrt(delta)) - common;
  r.flagged = r.block_argument >= 0.0;
  r.block_length = static_cast<long long>(std::ceil(std::abs(r.block_argument)));
  r.n_eff = static_cast<long long>(std::ceil(std::abs(std::log(delta) - common)));
  const long long n_eff_lattice = std::max<long long>(2, r.n_eff);
  const LatticeParams scaled =
      LatticeParams::unchecked(static_cast<int>(n_eff_lattice), p.cutoff, p.x, p.mu);
  r.scaled_cost = ft_ae_cost(scaled, total_time, delta);
  r.scaled_cost.scheme = "lieb-robinson";
  return r;
}

}  // namespace schwinger
