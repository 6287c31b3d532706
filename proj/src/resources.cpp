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

#include "schwinger/resources.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace schwinger {

namespace {

double clamped_log2(double arg, bool* clamped) {
  const double value = std::log2(arg);
  if (value < 0.0) {
    if (clamped) *clamped = true;
    return 0.0;
  }
  return value;
}

void check_delta(double delta) {
  if (!(delta > 0)) throw std::invalid_argument("synthesis budget must be positive");
}

}  // namespace

long long cnot_per_trotter_step(const LatticeParams& p) {
  const long long eta = p.eta;
  return static_cast<long long>(p.n_sites - 1) * (9 * eta * eta - 7 * eta + 34);
}

double tcount_hopping(long long cutoff, double delta, bool* clamped) {
  check_delta(delta);
  if (!is_power_of_two(cutoff)) throw std::invalid_argument("cutoff must be a power of 2");
  return 8.0 * (std::log2(static_cast<double>(cutoff)) - 1.0) +
         9.2 * clamped_log2(16.0 / delta, clamped);
}

double tcount_mass(double delta, bool* clamped) {
  check_delta(delta);
  return kRotationSynthesisFactor * clamped_log2(2.0 / delta, clamped);
}

SquarerCost toffoli_squarer(int eta) {
  if (eta < 1) throw std::invalid_argument("eta must be >= 1");
  SquarerCost cost;
  cost.toffolis = static_cast<long long>(eta - 1) * (12LL * eta - 3 * floor_log2(eta) - 14);
  cost.ancillas = 5 * eta - floor_log2(eta) - 1;
  return cost;
}

double tcount_electric_ft(int eta, double delta, bool* clamped) {
  check_delta(delta);
  if (eta < 1) throw std::invalid_argument("eta must be >= 1");
  return 4.45 * eta * clamped_log2(3.0 * eta / delta, clamped) +
         2.0 * kTGatesPerToffoli * static_cast<double>(toffoli_squarer(eta).toffolis);
}

TrotterStepCost tcount_trotter_step(const LatticeParams& p, double delta_circ) {
  check_delta(delta_circ);
  const int n = p.n_sites;
  const double unit = delta_circ / (6.0 * n - 5.0);
  TrotterStepCost cost;
  cost.expected_t = 2.0 * (n - 1) *
                        (tcount_hopping(p.cutoff, unit) + tcount_mass(unit) +
                         tcount_electric_ft(p.eta, unit)) +
                    tcount_mass(unit);
  const double denom = n * static_cast<double>(p.eta) * p.eta +
                       n * p.eta * std::log((6.0 * n - 5.0) / delta_circ);
  cost.lambda = cost.expected_t / denom;
  cost.qubits = static_cast<long long>(n) * (p.eta + 1) + 4LL * p.eta - floor_log2(p.eta) - 1;
  return cost;
}

double tcount_trotter_step_lambda_form(const LatticeParams& p, double delta_circ) {
  check_delta(delta_circ);
  const double n = p.n_sites;
  const double eta = p.eta;
  const double flog = floor_log2(p.eta);
  const double log_ratio = std::log2((6.0 * n - 5.0) / delta_circ);
  const double bracket = 96.0 * eta * eta + 24.0 * (1.0 - eta) * flog +
                         4.45 * eta * std::log2(3.0 * eta) + (10.35 + 4.45 * eta) * log_ratio -
                         200.0 * eta + 133.95;
  return 2.0 * (n - 1.0) * bracket +
         kRotationSynthesisFactor * std::log2(2.0 * (6.0 * n - 5.0) / delta_circ);
}

CensusCheck census_matches_formulas(const LatticeParams& p, StepMode mode) {
  CensusCheck check;
  std::ostringstream detail;
  const double t = 0.1;
  const GateCensus census = count_gates(build_trotter_step(p, t, mode));
  if (mode == StepMode::kNeg) {
    const long long bound = cnot_per_trotter_step(p);
    detail << "neg cnot census " << census.cnots() << " vs bound " << bound;
    if (census.cnots() > bound) check.passed = false;
    if (census.cnots() != bound) detail << " (not tight)";
  } else {
    long long expected = 0;
    if (p.eta >= 2) {
      const GateCensus inc = count_gates(build_incrementer_ancilla(p.eta));
      if (inc.toffolis() != p.eta - 2) {
        check.passed = false;
        detail << "incrementer census " << inc.toffolis() << " != " << (p.eta - 2) << "; ";
      }
      expected += 2LL * 2 * (p.n_sites - 1) * inc.toffolis();
    }
    const GateCensus sq = count_gates(build_squarer(p.eta));
    expected += 2LL * 2 * (p.n_sites - 1) * sq.toffolis();
    detail << "ft toffoli census " << census.toffolis() << " vs assembled " << expected;
    if (census.toffolis() != expected) check.passed = false;
  }
  check.detail = detail.str();
  return check;
}

}  // namespace schwinger
