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

#ifndef SCHWINGER_MEASURE_HPP
#define SCHWINGER_MEASURE_HPP

#include <cstdint>
#include <vector>

#include "schwinger/circuit.hpp"
#include "schwinger/lattice.hpp"

namespace schwinger {

struct ShotsResult {
  long long n_shots = 0;
  double nu = 0.0;
};

/// N_shots = floor(nu/(4 eps^2 (1-kappa))) with nu = 4 eps^2 (1-kappa) + 1;
/// guarantees rms error <= eps when the state error is at most eps sqrt(kappa).
ShotsResult shots_required(double eps, double kappa);

struct EstimateResult {
  double estimate = 0.0;       // mean pair density per lattice site, in [0, 1/2]
  double rms_target = 0.0;
  double shots_or_queries = 0.0;
  std::uint64_t seed = 0;
};

/// <N_p>/N for a normalized state.
double pair_density_expectation(const LatticeParams& p, const Vector& state);

/// Samples the positron-count distribution of `state` n_shots times and
/// returns the sample mean over N. Unbiased.
EstimateResult sample_pair_density(const LatticeParams& p, const Vector& state, long long n_shots,
                                   std::uint64_t seed);

/// The mean-estimation circuit: m+2 control qubits, 2^m system qubits.
/// prep acts on the system register; the select stage applies -Z_j for
/// j < 2^m and the identity above. The probability of the all-zeros outcome
/// encodes the mean occupation.
Circuit build_hadamard_test(int m, const Circuit& prep);

/// Probability of the all-zeros outcome of the circuit above, by state-vector
/// evaluation.
double hadamard_test_probability(int m, const Circuit& prep);

/// Weighted variant: the final mixing stage prepares amplitudes
/// sqrt(a_k/|a|_1) instead of the uniform Hadamard layer. weights.size() must
/// be 2^{m+2}, all positive.
Circuit build_weighted_hadamard_test(int m, const Circuit& prep, const std::vector<double>& weights);

double weighted_hadamard_test_probability(int m, const Circuit& prep,
                                          const std::vector<double>& weights);

/// Real-amplitude encoder |0...0> -> sum_k sqrt(p_k)|k> for nonnegative
/// weights (normalized internally), via uniformly controlled rotations.
Circuit build_amplitude_encoder(const std::vector<double>& weights);

struct AEConfig {
  int m = 1;
  double eps_l = 0.0;    // phase-estimation target, eps/2
  long long grid = 0;    // L, Grover-iteration grid size
  int repetitions = 0;   // R, median repetitions (odd)
  double eps_qft = 0.0;  // Fourier-synthesis budget, eps/8 (cost accounting only)
};

/// Smallest L with sqrt(2) pi/L + (pi/L)^2 <= eps/2, the exact-amplification
/// repetition count made odd, and the bookkeeping budgets.
AEConfig ae_config(double eps, int m = 1);

/// Amplitude-estimation simulation by exact outcome-distribution sampling:
/// the Grover eigenphases come from the dense success probability, the
/// phase-estimation outcome is drawn from its analytic distribution, and the
/// median of R runs is inverted to a density estimate.
EstimateResult simulate_amplitude_estimation(const Circuit& prep, const AEConfig& config,
                                             std::uint64_t seed);

/// Query bound (128 pi/(16-pi^2))(pi/eps + 2) ln(5/eps^2).
double ae_query_count(double eps);

/// Auxiliary T-gate bound of the estimation routine, control register size m.
double ae_tgate_count(double eps, int m);

}  // namespace schwinger

#endif  // SCHWINGER_MEASURE_HPP
