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

#include "schwinger/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace schwinger {

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::kX: return "X";
    case GateKind::kY: return "Y";
    case GateKind::kZ: return "Z";
    case GateKind::kH: return "H";
    case GateKind::kS: return "S";
    case GateKind::kSdg: return "SDG";
    case GateKind::kT: return "T";
    case GateKind::kTdg: return "TDG";
    case GateKind::kRz: return "RZ";
    case GateKind::kPhase: return "PHASE";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kCPhase: return "CPHASE";
    case GateKind::kToffoli: return "TOFFOLI";
    case GateKind::kToffoliU: return "TOFFOLI_U";
    case GateKind::kAncAlloc: return "ALLOC";
    case GateKind::kAncFree: return "FREE";
  }
  return "?";
}

int Gate::arity() const {
  switch (kind) {
    case GateKind::kPhase: return 0;
    case GateKind::kCnot:
    case GateKind::kCPhase: return 2;
    case GateKind::kToffoli:
    case GateKind::kToffoliU: return 3;
    default: return 1;
  }
}

void Circuit::check_qubit(int q) const {
  if (q < 0 || q >= num_physical_ + live_ancillas_)
    throw std::invalid_argument("qubit index out of bounds: " + std::to_string(q));
}

void Circuit::push1(GateKind kind, int q) {
  check_qubit(q);
  gates_.push_back({kind, q});
}

void Circuit::rz(int q, double theta) {
  check_qubit(q);
  gates_.push_back({GateKind::kRz, q, -1, -1, theta});
}

void Circuit::phase(double theta) { gates_.push_back({GateKind::kPhase, -1, -1, -1, theta}); }

void Circuit::cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw std::invalid_argument("CNOT control == target");
  gates_.push_back({GateKind::kCnot, control, target});
}

void Circuit::cphase(double theta, int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw std::invalid_argument("CPHASE control == target");
  gates_.push_back({GateKind::kCPhase, control, target, -1, theta});
}

void Circuit::toffoli(int c1, int c2, int target) {
  check_qubit(c1);
  check_qubit(c2);
  check_qubit(target);
  if (c1 == c2 || c1 == target || c2 == target)
    throw std::invalid_argument("Toffoli qubits must be distinct");
  gates_.push_back({GateKind::kToffoli, c1, c2, target});
}

void Circuit::toffoli_uncompute(int c1, int c2, int target) {
  check_qubit(c1);
  check_qubit(c2);
  check_qubit(target);
  if (c1 == c2 || c1 == target || c2 == target)
    throw std::invalid_argument("Toffoli qubits must be distinct");
  gates_.push_back({GateKind::kToffoliU, c1, c2, target});
}

int Circuit::alloc_ancilla() {
  const int q = num_physical_ + live_ancillas_;
  ++live_ancillas_;
  ancilla_high_water_ = std::max(ancilla_high_water_, live_ancillas_);
  gates_.push_back({GateKind::kAncAlloc, q});
  return q;
}

void Circuit::free_ancilla(int q) {
  if (live_ancillas_ == 0 || q != num_physical_ + live_ancillas_ - 1)
    throw std::invalid_argument("ancillas must be freed in reverse allocation order");
  --live_ancillas_;
  gates_.push_back({GateKind::kAncFree, q});
}

void Circuit::append(const Circuit& other) {
  if (other.num_physical_ != num_physical_)
    throw std::invalid_argument("append: physical register size mismatch");
  std::vector<int> identity(other.num_physical_);
  for (int i = 0; i < other.num_physical_; ++i) identity[i] = i;
  append_mapped(other, identity);
}

void Circuit::append_mapped(const Circuit& other, const std::vector<int>& qubit_map) {
  if (static_cast<int>(qubit_map.size()) != other.num_physical_)
    throw std::invalid_argument("append_mapped: map size mismatch");
  std::vector<int> anc_map;  // other's ancilla slot -> our qubit index
  auto remap = [&](int q) -> int {
    if (q < 0) return q;
    if (q < other.num_physical_) return qubit_map[q];
    const int slot = q - other.num_physical_;
    if (slot >= static_cast<int>(anc_map.size()))
      throw std::invalid_argument("append_mapped: gate on unallocated ancilla");
    return anc_map[slot];
  };
  for (const Gate& g : other.gates_) {
    switch (g.kind) {
      case GateKind::kAncAlloc:
        anc_map.push_back(alloc_ancilla());
        break;
      case GateKind::kAncFree: {
        const int q = remap(g.q0);
        free_ancilla(q);
        anc_map.pop_back();
        break;
      }
      default: {
        Gate mapped = g;
        mapped.q0 = remap(g.q0);
        mapped.q1 = remap(g.q1);
        mapped.q2 = remap(g.q2);
        if (mapped.q0 >= 0) check_qubit(mapped.q0);
        if (mapped.q1 >= 0) check_qubit(mapped.q1);
        if (mapped.q2 >= 0) check_qubit(mapped.q2);
        gates_.push_back(mapped);
      }
    }
  }
}

Circuit Circuit::inverse() const {
  if (live_ancillas_ != 0) throw std::logic_error("inverse: circuit has live ancillas");
  Circuit inv(num_physical_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    const Gate& g = *it;
    switch (g.kind) {
      case GateKind::kX:
      case GateKind::kY:
      case GateKind::kZ:
      case GateKind::kH:
        inv.push1(g.kind, g.q0);
        break;
      case GateKind::kS: inv.push1(GateKind::kSdg, g.q0); break;
      case GateKind::kSdg: inv.push1(GateKind::kS, g.q0); break;
      case GateKind::kT: inv.push1(GateKind::kTdg, g.q0); break;
      case GateKind::kTdg: inv.push1(GateKind::kT, g.q0); break;
      case GateKind::kRz: inv.rz(g.q0, -g.theta); break;
      case GateKind::kPhase: inv.phase(-g.theta); break;
      case GateKind::kCnot: inv.cnot(g.q0, g.q1); break;
      case GateKind::kCPhase: inv.cphase(-g.theta, g.q0, g.q1); break;
      case GateKind::kToffoli: inv.toffoli(g.q0, g.q1, g.q2); break;
      case GateKind::kToffoliU: inv.toffoli_uncompute(g.q0, g.q1, g.q2); break;
      case GateKind::kAncAlloc: inv.free_ancilla(inv.num_physical_ + inv.live_ancillas_ - 1); break;
      case GateKind::kAncFree: inv.alloc_ancilla(); break;
    }
  }
  return inv;
}

std::string Circuit::to_text() const {
  std::string out;
  char buf[128];
  for (const Gate& g : gates_) {
    const char* name = gate_kind_name(g.kind);
    const bool has_theta =
        g.kind == GateKind::kRz || g.kind == GateKind::kPhase || g.kind == GateKind::kCPhase;
    int n = 0;
    if (g.kind == GateKind::kPhase) {
      n = std::snprintf(buf, sizeof buf, "%s %.17g\n", name, g.theta);
    } else if (g.arity() == 1) {
      if (has_theta)
        n = std::snprintf(buf, sizeof buf, "%s %d %.17g\n", name, g.q0, g.theta);
      else
        n = std::snprintf(buf, sizeof buf, "%s %d\n", name, g.q0);
    } else if (g.arity() == 2) {
      if (has_theta)
        n = std::snprintf(buf, sizeof buf, "%s %d %d %.17g\n", name, g.q0, g.q1, g.theta);
      else
        n = std::snprintf(buf, sizeof buf, "%s %d %d\n", name, g.q0, g.q1);
    } else {
      n = std::snprintf(buf, sizeof buf, "%s %d %d %d\n", name, g.q0, g.q1, g.q2);
    }
    out.append(buf, static_cast<std::size_t>(n));
  }
  return out;
}

GateCensus count_gates(const Circuit& c) {
  GateCensus census;
  census.ancilla_high_water = c.ancilla_high_water();
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kX: ++census.x; break;
      case GateKind::kY: ++census.y; break;
      case GateKind::kZ: ++census.z; break;
      case GateKind::kH: ++census.h; break;
      case GateKind::kS: ++census.s; break;
      case GateKind::kSdg: ++census.sdg; break;
      case GateKind::kT: ++census.t; break;
      case GateKind::kTdg: ++census.tdg; break;
      case GateKind::kRz: ++census.rz; break;
      case GateKind::kPhase: ++census.phase; break;
      case GateKind::kCnot: ++census.cnot_raw; break;
      case GateKind::kCPhase: ++census.cphase; break;
      case GateKind::kToffoli: ++census.toffoli; break;
      case GateKind::kToffoliU: ++census.toffoli_uncompute; break;
      case GateKind::kAncAlloc:
      case GateKind::kAncFree: break;
    }
  }
  return census;
}

namespace {

inline void apply_one_qubit(Vector& state, int q, Complex m00, Complex m01, Complex m10,
                            Complex m11) {
  const Eigen::Index dim = state.size();
  const Eigen::Index bit = Eigen::Index{1} << q;
  for (Eigen::Index base = 0; base < dim; ++base) {
    if (base & bit) continue;
    const Complex a = state(base);
    const Complex b = state(base | bit);
    state(base) = m00 * a + m01 * b;
    state(base | bit) = m10 * a + m11 * b;
  }
}

inline void apply_diag_one_qubit(Vector& state, int q, Complex d0, Complex d1) {
  const Eigen::Index dim = state.size();
  const Eigen::Index bit = Eigen::Index{1} << q;
  for (Eigen::Index i = 0; i < dim; ++i) state(i) *= (i & bit) ? d1 : d0;
}

}  // namespace

Vector apply_circuit(const Circuit& c, const Vector& in, const EvalOptions& opts) {
  const Eigen::Index phys_dim = Eigen::Index{1} << c.num_physical();
  if (in.size() != phys_dim)
    throw std::invalid_argument("apply_circuit: state dimension mismatch");
  Vector state = in;
  int live = 0;
  const double pert_angle =
      (opts.rotation_perturbation > 0) ? 4.0 * std::asin(opts.rotation_perturbation / 2.0) : 0.0;
  const Complex i_unit(0, 1);
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kX: apply_one_qubit(state, g.q0, 0, 1, 1, 0); break;
      case GateKind::kY: apply_one_qubit(state, g.q0, 0, -i_unit, i_unit, 0); break;
      case GateKind::kZ: apply_diag_one_qubit(state, g.q0, 1, -1); break;
      case GateKind::kH: {
        const double s = 1.0 / std::sqrt(2.0);
        apply_one_qubit(state, g.q0, s, s, s, -s);
        break;
      }
      case GateKind::kS: apply_diag_one_qubit(state, g.q0, 1, i_unit); break;
      case GateKind::kSdg: apply_diag_one_qubit(state, g.q0, 1, -i_unit); break;
      case GateKind::kT: apply_diag_one_qubit(state, g.q0, 1, std::polar(1.0, M_PI / 4)); break;
      case GateKind::kTdg: apply_diag_one_qubit(state, g.q0, 1, std::polar(1.0, -M_PI / 4)); break;
      case GateKind::kRz: {
        const double theta = g.theta + pert_angle;
        apply_diag_one_qubit(state, g.q0, std::polar(1.0, -theta / 2), std::polar(1.0, theta / 2));
        break;
      }
      case GateKind::kPhase: state *= std::polar(1.0, g.theta); break;
      case GateKind::kCnot: {
        const Eigen::Index cbit = Eigen::Index{1} << g.q0;
        const Eigen::Index tbit = Eigen::Index{1} << g.q1;
        const Eigen::Index dim = state.size();
        for (Eigen::Index idx = 0; idx < dim; ++idx)
          if ((idx & cbit) && !(idx & tbit)) std::swap(state(idx), state(idx | tbit));
        break;
      }
      case GateKind::kCPhase: {
        const Eigen::Index cbit = Eigen::Index{1} << g.q0;
        const Eigen::Index tbit = Eigen::Index{1} << g.q1;
        const Complex ph = std::polar(1.0, g.theta);
        const Eigen::Index dim = state.size();
        for (Eigen::Index idx = 0; idx < dim; ++idx)
          if ((idx & cbit) && (idx & tbit)) state(idx) *= ph;
        break;
      }
      case GateKind::kToffoli:
      case GateKind::kToffoliU: {
        const Eigen::Index c1 = Eigen::Index{1} << g.q0;
        const Eigen::Index c2 = Eigen::Index{1} << g.q1;
        const Eigen::Index tbit = Eigen::Index{1} << g.q2;
        const Eigen::Index dim = state.size();
        for (Eigen::Index idx = 0; idx < dim; ++idx)
          if ((idx & c1) && (idx & c2) && !(idx & tbit)) std::swap(state(idx), state(idx | tbit));
        break;
      }
      case GateKind::kAncAlloc: {
        ++live;
        Vector grown = Vector::Zero(state.size() * 2);
        grown.head(state.size()) = state;
        state = std::move(grown);
        break;
      }
      case GateKind::kAncFree: {
        const Eigen::Index half = state.size() / 2;
        const double leak = state.tail(half).norm();
        if (leak > opts.ancilla_tol)
          throw std::runtime_error("ancilla leakage: freed ancilla not in |0> (norm " +
                                   std::to_string(leak) + ")");
        Vector shrunk = state.head(half);
        state = std::move(shrunk);
        --live;
        break;
      }
    }
  }
  if (live != 0) throw std::runtime_error("apply_circuit: circuit ends with live ancillas");
  return state;
}

Matrix circuit_to_unitary(const Circuit& c, const EvalOptions& opts, int dense_limit) {
  const int total = c.num_physical() + c.ancilla_high_water();
  if (total > dense_limit)
    throw std::runtime_error("dense dimension guard exceeded: " + std::to_string(total) +
                             " qubits > limit " + std::to_string(dense_limit));
  const Eigen::Index dim = Eigen::Index{1} << c.num_physical();
  Matrix u(dim, dim);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_threads = static_cast<unsigned>(std::min<Eigen::Index>(hw, dim));
  std::vector<std::thread> workers;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < n_threads; ++w) {
    workers.emplace_back([&, w]() {
      try {
        for (Eigen::Index col = w; col < dim; col += n_threads) {
          Vector basis = Vector::Zero(dim);
          basis(col) = 1.0;
          u.col(col) = apply_circuit(c, basis, opts);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
  return u;
}

}  // namespace schwinger
