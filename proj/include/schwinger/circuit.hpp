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

#ifndef SCHWINGER_CIRCUIT_HPP
#define SCHWINGER_CIRCUIT_HPP

#include <string>
#include <vector>

#include "schwinger/linalg.hpp"

namespace schwinger {

/// Gate kinds. Rz(theta) = diag(e^{-i theta/2}, e^{+i theta/2}); Phase is a
/// global phase marker e^{i theta}; CPhase is diag(1,1,1,e^{i theta}).
/// ToffoliU acts like a Toffoli but models the measurement-assisted
/// uncomputation of a logical AND: it costs no T gates and no Toffolis, and is
/// only valid where the target already holds the AND of its controls.
enum class GateKind {
  kX,
  kY,
  kZ,
  kH,
  kS,
  kSdg,
  kT,
  kTdg,
  kRz,
  kPhase,
  kCnot,
  kCPhase,
  kToffoli,
  kToffoliU,
  kAncAlloc,
  kAncFree,
};

const char* gate_kind_name(GateKind kind);

struct Gate {
  GateKind kind;
  int q0 = -1;
  int q1 = -1;
  int q2 = -1;
  double theta = 0.0;

  int arity() const;
};

/// An ordered gate list over `num_physical` qubits plus stack-allocated
/// ancillas. Ancillas live at indices >= num_physical and must be freed in
/// reverse allocation order with the qubit back in |0>.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int num_physical) : num_physical_(num_physical) {}

  int num_physical() const { return num_physical_; }
  int ancilla_high_water() const { return ancilla_high_water_; }
  const std::vector<Gate>& gates() const { return gates_; }

  void x(int q) { push1(GateKind::kX, q); }
  void y(int q) { push1(GateKind::kY, q); }
  void z(int q) { push1(GateKind::kZ, q); }
  void h(int q) { push1(GateKind::kH, q); }
  void s(int q) { push1(GateKind::kS, q); }
  void sdg(int q) { push1(GateKind::kSdg, q); }
  void t(int q) { push1(GateKind::kT, q); }
  void tdg(int q) { push1(GateKind::kTdg, q); }
  void rz(int q, double theta);
  void phase(double theta);
  void cnot(int control, int target);
  void cphase(double theta, int control, int target);
  void toffoli(int c1, int c2, int target);
  void toffoli_uncompute(int c1, int c2, int target);

  int alloc_ancilla();
  void free_ancilla(int q);
  int live_ancillas() const { return live_ancillas_; }

  /// Appends another circuit over the same physical register; its ancillas
  /// are restacked on top of any currently live ones.
  void append(const Circuit& other);

  /// Appends `other` with other's qubit i mapped to qubit_map[i]. Ancillas of
  /// `other` are re-allocated here.
  void append_mapped(const Circuit& other, const std::vector<int>& qubit_map);

  /// Gate-reversed, gate-inverted circuit; equals the adjoint unitary.
  Circuit inverse() const;

  /// One gate per line: KIND q0 [q1 [q2]] [theta], 17 significant digits.
  std::string to_text() const;

 private:
  void push1(GateKind kind, int q);
  void check_qubit(int q) const;

  int num_physical_ = 0;
  int live_ancillas_ = 0;
  int ancilla_high_water_ = 0;
  std::vector<Gate> gates_;
};

struct GateCensus {
  long long x = 0, y = 0, z = 0, h = 0, s = 0, sdg = 0, t = 0, tdg = 0;
  long long rz = 0, phase = 0, cnot_raw = 0, cphase = 0, toffoli = 0, toffoli_uncompute = 0;
  int ancilla_high_water = 0;

  /// Rotation count: explicit Rz gates.
  long long rotations() const { return rz; }
  /// Entangling-gate count in the two-qubit cost model: plain CNOTs plus two
  /// per controlled phase rotation.
  long long cnots() const { return cnot_raw + 2 * cphase; }
  long long toffolis() const { return toffoli; }
};

GateCensus count_gates(const Circuit& c);

struct EvalOptions {
  /// Perturb every Rz by this much in operator norm (angle shift
  /// 4*asin(delta/2)); models imperfect rotation synthesis.
  double rotation_perturbation = 0.0;
  /// Tolerance on ancilla cleanliness at AncFree.
  double ancilla_tol = 1e-9;
};

/// Applies the circuit to a state of dimension 2^num_physical. Ancillas are
/// expanded on allocation and contracted (asserted |0>) on free; throws
/// std::runtime_error on ancilla leakage.
Vector apply_circuit(const Circuit& c, const Vector& in, const EvalOptions& opts = {});

/// Full unitary on the physical register, with ancillas |0>-in/|0>-out.
/// Guarded by the dense limit (physical + ancilla high water).
Matrix circuit_to_unitary(const Circuit& c, const EvalOptions& opts = {},
                          int dense_limit = kDefaultDenseLimit);

}  // namespace schwinger

#endif  // SCHWINGER_CIRCUIT_HPP
