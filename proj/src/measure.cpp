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

#include "schwinger/measure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace schwinger {

namespace {

constexpr double kPi = M_PI;

void check_eps(double eps) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
}

// Applies X on the zero bits of `pattern`, builds the AND of all controls in
// an ancilla chain, hands that qubit to `body`, and undoes everything.
void with_control_pattern(Circuit& c, const std::vector<int>& controls, long long pattern,
                          const std::function<void(int)>& body) {
  for (std::size_t i = 0; i < controls.size(); ++i)
    if (!((pattern >> i) & 1)) c.x(controls[i]);
  if (controls.size() == 1) {
    body(controls[0]);
  } else {
    std::vector<int> chain;
    chain.push_back(c.alloc_ancilla());
    c.toffoli(controls[0], controls[1], chain.back());
    for (std::size_t i = 2; i < controls.size(); ++i) {
      const int next = c.alloc_ancilla();
      c.toffoli(chain.back(), controls[i], next);
      chain.push_back(next);
    }
    body(chain.back());
    for (std::size_t i = controls.size(); i-- > 2;) {
      const int top = chain.back();
      chain.pop_back();
      c.toffoli_uncompute(chain.back(), controls[i], top);
      c.free_ancilla(top);
    }
    c.toffoli_uncompute(controls[0], controls[1], chain.back());
    c.free_ancilla(chain.back());
  }
  for (std::size_t i = 0; i < controls.size(); ++i)
    if (!((pattern >> i) & 1)) c.x(controls[i]);
}

// Ry(theta) from the available gate set: S H Rz(theta) H Sdg as operators.
void append_ry(Circuit& c, int q, double theta) {
  c.sdg(q);
  c.h(q);
  c.rz(q, theta);
  c.h(q);
  c.s(q);
}

void append_controlled_ry(Circuit& c, int control, int target, double theta) {
  append_ry(c, target, theta / 2);
  c.cnot(control, target);
  append_ry(c, target, -theta / 2);
  c.cnot(control, target);
}

std::vector<int> range_vec(int first, int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = first + i;
  return v;
}

}  // namespace

ShotsResult shots_required(double eps, double kappa) {
  check_eps(eps);
  if (!(kappa > 0.0) || !(kappa < 1.0)) throw std::invalid_argument("kappa must be in (0,1)");
  ShotsResult r;
  r.nu = 4.0 * eps * eps * (1.0 - kappa) + 1.0;
  r.n_shots = static_cast<long long>(std::floor(r.nu / (4.0 * eps * eps * (1.0 - kappa))));
  return r;
}

double pair_density_expectation(const LatticeParams& p, const Vector& state) {
  const auto diag = pair_number_diagonal(p);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < state.size(); ++i) acc += diag[i] * std::norm(state(i));
  return acc / p.n_sites;
}

EstimateResult sample_pair_density(const LatticeParams& p, const Vector& state, long long n_shots,
                                   std::uint64_t seed) {
  if (n_shots < 1) throw std::invalid_argument("n_shots must be >= 1");
  if (std::abs(state.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("state must be normalized");
  const auto diag = pair_number_diagonal(p);
  std::vector<double> cdf(state.size());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    acc += std::norm(state(i));
    cdf[i] = acc;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double sum = 0.0;
  for (long long shot = 0; shot < n_shots; ++shot) {
    const double u = unif(rng) * acc;
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    const auto idx = static_cast<std::size_t>(std::distance(cdf.begin(), it));
    sum += diag[std::min(idx, cdf.size() - 1)];
  }
  EstimateResult r;
  r.estimate = sum / static_cast<double>(n_shots) / p.n_sites;
  r.shots_or_queries = static_cast<double>(n_shots);
  r.seed = seed;
  return r;
}

Circuit build_hadamard_test(int m, const Circuit& prep) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  const int n_controls = m + 2;
  const int n_system = 1 << m;
  if (prep.num_physical() != n_system)
    throw std::invalid_argument("prep register must have 2^m qubits");
  Circuit c(n_controls + n_system);
  const std::vector<int> controls = range_vec(0, n_controls);
  const std::vector<int> system = range_vec(n_controls, n_system);
  c.append_mapped(prep, system);
  for (int q : controls) c.h(q);
  for (long long j = 0; j < n_system; ++j) {
    // Select stage: -Z on system qubit j when the control register reads j.
    with_control_pattern(c, controls, j, [&](int q) {
      c.z(q);
      c.cphase(kPi, q, system[static_cast<std::size_t>(j)]);
    });
  }
  for (int q : controls) c.h(q);
  c.append_mapped(prep.inverse(), system);
  return c;
}

double hadamard_test_probability(int m, const Circuit& prep) {
  const Circuit c = build_hadamard_test(m, prep);
  Vector in = Vector::Zero(Eigen::Index{1} << c.num_physical());
  in(0) = 1.0;
  const Vector out = apply_circuit(c, in);
  return std::norm(out(0));
}

Circuit build_amplitude_encoder(const std::vector<double>& weights) {
  const std::size_t dim = weights.size();
  if (dim == 0 || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("weight count must be a power of 2");
  for (double w : weights)
    if (w < 0) throw std::invalid_argument("weights must be nonnegative");
  const int n = floor_log2(static_cast<long long>(dim));
  Circuit c(std::max(n, 1));
  if (n == 0) return c;
  // Top-down probability tree: rotate each qubit conditioned on the pattern
  // of the more significant ones.
  for (int level = n - 1; level >= 0; --level) {
    const int high_bits = n - 1 - level;
    for (long long h = 0; h < (1LL << high_bits); ++h) {
      double left = 0.0, right = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        if ((static_cast<long long>(k) >> (level + 1)) != h) continue;
        if ((k >> level) & 1)
          right += weights[k];
        else
          left += weights[k];
      }
      if (left + right == 0.0) continue;
      const double theta = 2.0 * std::atan2(std::sqrt(right), std::sqrt(left));
      if (theta == 0.0) continue;
      if (high_bits == 0) {
        append_ry(c, level, theta);
      } else {
        std::vector<int> controls = range_vec(level + 1, high_bits);
        with_control_pattern(c, controls, h,
                             [&](int q) { append_controlled_ry(c, q, level, theta); });
      }
    }
  }
  return c;
}

Circuit build_weighted_hadamard_test(int m, const Circuit& prep,
                                     const std::vector<double>& weights) {
  const int n_controls = m + 2;
  const int n_system = 1 << m;
  if (static_cast<int>(weights.size()) != (1 << n_controls))
    throw std::invalid_argument("need one weight per control pattern");
  if (prep.num_physical() != n_system)
    throw std::invalid_argument("prep register must have 2^m qubits");
  Circuit c(n_controls + n_system);
  const std::vector<int> controls = range_vec(0, n_controls);
  const std::vector<int> system = range_vec(n_controls, n_system);
  c.append_mapped(prep, system);
  for (int q : controls) c.h(q);
  for (long long j = 0; j < n_system; ++j) {
    with_control_pattern(c, controls, j, [&](int q) {
      c.z(q);
      c.cphase(kPi, q, system[static_cast<std::size_t>(j)]);
    });
  }
  c.append_mapped(prep.inverse(), system);
  c.append_mapped(build_amplitude_encoder(weights).inverse(), controls);
  return c;
}

double weighted_hadamard_test_probability(int m, const Circuit& prep,
                                          const std::vector<double>& weights) {
  const Circuit c = build_weighted_hadamard_test(m, prep, weights);
  Vector in = Vector::Zero(Eigen::Index{1} << c.num_physical());
  in(0) = 1.0;
  const Vector out = apply_circuit(c, in);
  return std::norm(out(0));
}

AEConfig ae_config(double eps, int m) {
  check_eps(eps);
  AEConfig config;
  config.m = m;
  config.eps_l = eps / 2.0;
  config.eps_qft = eps / 8.0;
  long long grid = std::max<long long>(
      1, static_cast<long long>(std::floor(std::sqrt(2.0) * kPi / config.eps_l)));
  while (std::sqrt(2.0) * kPi / static_cast<double>(grid) +
             std::pow(kPi / static_cast<double>(grid), 2) >
         config.eps_l)
    ++grid;
  config.grid = grid;
  const double chernoff = 8.0 * std::sqrt(2.0) * kPi / (16.0 - kPi * kPi);
  const double raw = chernoff * std::log((2.0 - eps * eps) / (eps * eps));
  int reps = static_cast<int>(std::ceil(raw));
  if (reps < 1) reps = 1;
  if (reps % 2 == 0) ++reps;
  config.repetitions = reps;
  return config;
}

namespace {

// Phase-estimation outcome weight for grid offset delta (as a fraction of a
// full turn), L grid points.
double pe_kernel(double delta, long long grid) {
  double d = delta - std::floor(delta);
  if (d >= 0.5) d -= 1.0;
  if (std::abs(d) < 1e-13) return 1.0;
  const double num = std::sin(kPi * static_cast<double>(grid) * d);
  const double den = static_cast<double>(grid) * std::sin(kPi * d);
  return (num * num) / (den * den);
}

}  // namespace

EstimateResult simulate_amplitude_estimation(const Circuit& prep, const AEConfig& config,
                                             std::uint64_t seed) {
  const double p_raw = hadamard_test_probability(config.m, prep);
  const double p = std::clamp(p_raw, 0.0, 1.0);
  const double theta_a = std::asin(std::sqrt(p));
  const double f = theta_a / kPi;
  const long long grid = config.grid;
  std::vector<double> cdf(static_cast<std::size_t>(grid));
  double acc = 0.0;
  for (long long y = 0; y < grid; ++y) {
    const double frac = static_cast<double>(y) / static_cast<double>(grid);
    acc += 0.5 * pe_kernel(f - frac, grid) + 0.5 * pe_kernel(-f - frac, grid);
    cdf[static_cast<std::size_t>(y)] = acc;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> amplitudes;
  amplitudes.reserve(static_cast<std::size_t>(config.repetitions));
  for (int rep = 0; rep < config.repetitions; ++rep) {
    const double u = unif(rng) * acc;
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    const auto y = static_cast<long long>(std::distance(cdf.begin(), it));
    const double angle = kPi * static_cast<double>(std::min(y, grid - 1)) / static_cast<double>(grid);
    amplitudes.push_back(std::sin(angle) * std::sin(angle));
  }
  std::sort(amplitudes.begin(), amplitudes.end());
  const double median = amplitudes[(amplitudes.size() - 1) / 2];  // lower median
  const double mean_occupation = std::clamp(2.0 * std::sqrt(median) - 1.0, 0.0, 1.0);
  EstimateResult r;
  r.estimate = mean_occupation / 2.0;
  r.rms_target = 2.0 * config.eps_l;
  r.shots_or_queries = 4.0 * static_cast<double>(grid) * config.repetitions;
  r.seed = seed;
  return r;
}

double ae_query_count(double eps) {
  check_eps(eps);
  return 128.0 * kPi / (16.0 - kPi * kPi) * (kPi / eps + 2.0) * std::log(5.0 / (eps * eps));
}

double ae_tgate_count(double eps, int m) {
  check_eps(eps);
  const double log_l = std::log2(2.0 * std::sqrt(2.0) * kPi / eps + 4.0);
  const double qft_term = (7.0 / 3.0) * log_l * log_l * std::log2(16.0 * log_l * log_l / (eps * eps));
  const double grover_term = 32.0 * kPi * (std::pow(2.0, m + 4) + 8.0) * (m - 1.0) /
                             (16.0 - kPi * kPi) * (kPi / eps + 2.0);
  return (grover_term + qft_term) * std::log(5.0 / (eps * eps));
}

}  // namespace schwinger
