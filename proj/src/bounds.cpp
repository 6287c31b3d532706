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

#include "schwinger/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "schwinger/trotter.hpp"

namespace schwinger {

double per_site_bound_polynomial(const LatticeParams& p) {
  const double x = p.x;
  const double mu = p.mu;
  const double lambda = static_cast<double>(p.cutoff);
  return (2.0 / 3.0) * x * lambda * lambda +
         (2.0 * x * x + (5.0 / 6.0) * x * mu + (2.0 / 3.0) * x) * lambda +
         (39.0 / 8.0) * x * x * x + (25.0 / 12.0) * x * x * mu + x * x +
         (1.0 / 3.0) * x * mu * mu + (5.0 / 12.0) * x * mu + (1.0 / 6.0) * x;
}

double lattice_bound_aggregate(const LatticeParams& p) {
  return p.n_sites * per_site_bound_polynomial(p);
}

double commutator_bound_case(int case_id, const LatticeParams& p) {
  const double x = p.x;
  const double mu = p.mu;
  const double lambda = static_cast<double>(p.cutoff);
  switch (case_id) {
    case 1:
      return x * (2 * lambda * lambda + (2 + 2 * mu) * lambda + mu * mu / 2 + mu + 0.5);
    case 2:
    case 3:
      return x * x * mu / 2;
    case 4:
      return x * x * x / 2;
    case 5:
      return x * x * (mu / 2 + lambda + 0.5);
    case 6:
      return x * mu * (mu / 2 + lambda + 0.5);
    case 7:
      return x * mu * mu / 2;
    case 8:
      return x * x * (mu / 2 + lambda + 0.5);
    default:
      throw std::invalid_argument("commutator bound case must be 1..8");
  }
}

double brute_force_nested_commutator(const Matrix& a, const Matrix& b, const Matrix& c) {
  const Matrix inner = a * b - b * a;
  return spectral_norm(inner * c - c * inner);
}

double trotter_step_bound(const LatticeParams& p, double t) {
  return p.n_sites * std::abs(t * t * t) * per_site_bound_polynomial(p);
}

double step_rho(const LatticeParams& p, double total_time, double delta) {
  const double lambda = static_cast<double>(p.cutoff);
  const double head = std::sqrt(delta) / (std::sqrt(static_cast<double>(p.n_sites)) *
                                          std::pow(total_time, 1.5) * lambda * std::sqrt(p.x));
  return head + std::sqrt(per_site_bound_polynomial(p)) / (lambda * std::sqrt(p.x));
}

double required_steps_real(const LatticeParams& p, double total_time, double delta) {
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  if (!(total_time > 0)) throw std::invalid_argument("total time must be positive");
  const double lambda = static_cast<double>(p.cutoff);
  return std::sqrt(static_cast<double>(p.n_sites)) * std::pow(total_time, 1.5) * lambda *
         std::sqrt(p.x) * step_rho(p, total_time, delta) / std::sqrt(delta);
}

StepsResult required_steps(const LatticeParams& p, double total_time, double delta) {
  const double real = required_steps_real(p, total_time, delta);
  StepsResult r;
  r.steps = static_cast<long long>(std::floor(real));
  r.rho = step_rho(p, total_time, delta);
  return r;
}

double empirical_trotter_error(const LatticeParams& p, double t, int dense_limit) {
  const Matrix v = trotter_step_dense(p, t, dense_limit);
  const Matrix u = exact_propagator(build_dense_hamiltonian(p, dense_limit), t);
  return spectral_norm(v - u);
}

long long neg_optimal_steps(const LatticeParams& p, double total_time,
                            double per_step_circuit_error) {
  if (!(per_step_circuit_error > 0))
    throw std::invalid_argument("per-step circuit error must be positive");
  const double k = std::pow(total_time, 3.0) * lattice_bound_aggregate(p);
  const double stationary = std::cbrt(2.0 * k / per_step_circuit_error);
  long long best = 1;
  double best_value = std::numeric_limits<double>::infinity();
  const long long center = std::max<long long>(1, static_cast<long long>(std::llround(stationary)));
  for (long long s = std::max<long long>(1, center - 2); s <= center + 2; ++s) {
    const double value = k / (static_cast<double>(s) * s) + static_cast<double>(s) * per_step_circuit_error;
    if (value < best_value) {
      best_value = value;
      best = s;
    }
  }
  return best;
}

Matrix triple_operand(const LatticeParams& p, const TermId& id, int dense_limit) {
  if (id.kind == TermId::kMass && id.component == -1) {
    Matrix d = build_term(p, TermId{TermId::kMass, id.site, 0}, dense_limit);
    if (id.site <= p.n_sites - 1)
      d += build_term(p, TermId{TermId::kElectric, id.site, 0}, dense_limit);
    return d;
  }
  return build_term(p, id, dense_limit);
}

std::vector<CommutatorTriple> enumerate_error_triples(const LatticeParams& p) {
  std::vector<CommutatorTriple> triples;
  const int n = p.n_sites;
  auto hop = [](int r, int i) { return TermId{TermId::kHopping, r, i}; };
  auto dfull = [](int r) { return TermId{TermId::kMass, r, -1}; };  // component -1: full D_r
  auto add = [&](TermId a, TermId b, TermId c, int case_id, double w) {
    triples.push_back({a, b, c, case_id, w});
  };
  const double w12 = 1.0 / 12.0;
  const double w24 = 1.0 / 24.0;
  for (int r = 1; r <= n; ++r) {
    const bool t_r = r <= n - 1;
    const bool t_r1 = r + 1 <= n - 1;
    const bool t_r2 = r + 2 <= n - 1;
    const bool d_r1 = r + 1 <= n;
    const bool d_r2 = r + 2 <= n;
    if (t_r) {
      for (int i = 1; i <= 4; ++i) {
        add(dfull(r), hop(r, i), dfull(r), 1, w12);
        if (d_r1) add(hop(r, i), dfull(r + 1), hop(r, i), 2, w12);
        for (int j = i + 1; j <= 4; ++j) add(hop(r, i), hop(r, j), hop(r, i), 4, w12);
        if (t_r1)
          for (int j = 1; j <= 4; ++j) add(hop(r, i), hop(r + 1, j), hop(r, i), 4, w12);

        for (int j = 1; j <= 4; ++j) add(dfull(r), hop(r, i), hop(r, j), 5, w24);
        if (d_r1) add(dfull(r), hop(r, i), dfull(r + 1), 6, w24);
        if (t_r1)
          for (int j = 1; j <= 4; ++j) add(dfull(r), hop(r, i), hop(r + 1, j), 5, w24);
        for (int j = i + 1; j <= 4; ++j)
          for (int k = i + 1; k <= 4; ++k) add(hop(r, i), hop(r, j), hop(r, k), 4, w24);
        if (d_r1)
          for (int j = i + 1; j <= 4; ++j) add(hop(r, i), hop(r, j), dfull(r + 1), 3, w24);
        if (t_r1)
          for (int j = i + 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k) add(hop(r, i), hop(r, j), hop(r + 1, k), 4, w24);
        if (d_r1)
          for (int j = i + 1; j <= 4; ++j) add(hop(r, i), dfull(r + 1), hop(r, j), 2, w24);
        if (d_r1) add(hop(r, i), dfull(r + 1), dfull(r + 1), 7, w24);
        if (d_r1 && t_r1)
          for (int j = 1; j <= 4; ++j) add(hop(r, i), dfull(r + 1), hop(r + 1, j), 2, w24);
        if (t_r1)
          for (int j = 1; j <= 4; ++j)
            for (int k = i + 1; k <= 4; ++k) add(hop(r, i), hop(r + 1, j), hop(r, k), 4, w24);
        if (t_r1 && d_r1)
          for (int j = 1; j <= 4; ++j) add(hop(r, i), hop(r + 1, j), dfull(r + 1), 8, w24);
        if (t_r1)
          for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k) add(hop(r, i), hop(r + 1, j), hop(r + 1, k), 4, w24);
        if (t_r1 && d_r2)
          for (int j = 1; j <= 4; ++j) add(hop(r, i), hop(r + 1, j), dfull(r + 2), 3, w24);
        if (t_r1 && t_r2)
          for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k) add(hop(r, i), hop(r + 1, j), hop(r + 2, k), 4, w24);
      }
    }
  }
  return triples;
}

}  // namespace schwinger
