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

#include "schwinger/trotter.hpp"

#include <cmath>
#include <stdexcept>

namespace schwinger {

namespace {

// H + controlled-phase ladder, highest qubit first. Produces the Fourier
// transform with bit-reversed output order; used symmetrically so no swap
// network is needed.
void append_fourier(Circuit& c, const std::vector<int>& q) {
  const int eta = static_cast<int>(q.size());
  for (int n = eta - 1; n >= 0; --n) {
    c.h(q[n]);
    for (int m = n - 1; m >= 0; --m) c.cphase(M_PI / static_cast<double>(1LL << (n - m)), q[m], q[n]);
  }
}

void append_fourier_inverse(Circuit& c, const std::vector<int>& q) {
  const int eta = static_cast<int>(q.size());
  for (int n = 0; n < eta; ++n) {
    for (int m = 0; m < n; ++m) c.cphase(-M_PI / static_cast<double>(1LL << (n - m)), q[m], q[n]);
    c.h(q[n]);
  }
}

// |j> -> w^j |j> with w = e^{2 pi i/2^eta}, expressed in the bit-reversed
// Fourier frame: qubit n picks up diag(1, e^{i pi / 2^n}).
void append_increment_phases(Circuit& c, const std::vector<int>& q, double direction) {
  const int eta = static_cast<int>(q.size());
  double total = 0.0;
  for (int n = 0; n < eta; ++n) {
    const double alpha = direction * M_PI / static_cast<double>(1LL << n);
    c.rz(q[n], alpha);
    total += alpha / 2.0;
  }
  c.phase(total);
}

void append_incrementer_qft(Circuit& c, const std::vector<int>& q) {
  append_fourier(c, q);
  append_increment_phases(c, q, 1.0);
  append_fourier_inverse(c, q);
}

void append_decrementer_qft(Circuit& c, const std::vector<int>& q) {
  append_fourier(c, q);
  append_increment_phases(c, q, -1.0);
  append_fourier_inverse(c, q);
}

void append_incrementer_ancilla(Circuit& c, const std::vector<int>& q) {
  const int eta = static_cast<int>(q.size());
  if (eta == 1) {
    c.x(q[0]);
    return;
  }
  // Carries a_k = x_0 & ... & x_{k-1}, k = 1..eta-1.
  std::vector<int> a(eta);
  a[1] = c.alloc_ancilla();
  c.cnot(q[0], a[1]);
  for (int k = 2; k <= eta - 1; ++k) {
    a[k] = c.alloc_ancilla();
    c.toffoli(a[k - 1], q[k - 1], a[k]);
  }
  // Flip top-down so each uncomputation still sees the original lower bits.
  for (int k = eta - 1; k >= 1; --k) {
    c.cnot(a[k], q[k]);
    if (k >= 2)
      c.toffoli_uncompute(a[k - 1], q[k - 1], a[k]);
    else
      c.cnot(q[0], a[1]);
    c.free_ancilla(a[k]);
  }
  c.x(q[0]);
}

// Adds a into the window (b, z): b <- low eta bits of a+b, z <- carry out.
// Ripple MAJ/UMA chain; `carry` is a borrowed |0> qubit, restored.
void append_ripple_add(Circuit& c, const std::vector<int>& a, const std::vector<int>& b, int z,
                       int carry) {
  const int n = static_cast<int>(a.size());
  auto maj = [&](int ci, int bi, int ai) {
    c.cnot(ai, bi);
    c.cnot(ai, ci);
    c.toffoli(ci, bi, ai);
  };
  auto uma = [&](int ci, int bi, int ai) {
    c.toffoli(ci, bi, ai);
    c.cnot(ai, ci);
    c.cnot(ci, bi);
  };
  maj(carry, b[0], a[0]);
  for (int i = 1; i < n; ++i) maj(a[i - 1], b[i], a[i]);
  c.cnot(a[n - 1], z);
  for (int i = n - 1; i >= 1; --i) uma(a[i - 1], b[i], a[i]);
  uma(carry, b[0], a[0]);
}

// Copies x*x_j into w (w starts |0>), or uncopies when direction < 0.
void append_partial_product(Circuit& c, const std::vector<int>& x, const std::vector<int>& w,
                            int j) {
  const int eta = static_cast<int>(x.size());
  c.cnot(x[j], w[j]);
  for (int k = 0; k < eta; ++k)
    if (k != j) c.toffoli(x[j], x[k], w[k]);
}

// |x>|0^{2 eta}> -> |x>|x^2> into acc; work registers allocated internally.
void append_square(Circuit& c, const std::vector<int>& x, const std::vector<int>& acc) {
  const int eta = static_cast<int>(x.size());
  c.cnot(x[0], acc[0]);
  for (int k = 1; k < eta; ++k) c.toffoli(x[0], x[k], acc[k]);
  if (eta == 1) return;
  std::vector<int> w(eta);
  for (int k = 0; k < eta; ++k) w[k] = c.alloc_ancilla();
  const int carry = c.alloc_ancilla();
  for (int j = 1; j <= eta - 1; ++j) {
    append_partial_product(c, x, w, j);
    std::vector<int> window(acc.begin() + j, acc.begin() + j + eta);
    append_ripple_add(c, w, window, acc[j + eta], carry);
    append_partial_product(c, x, w, j);
  }
  c.free_ancilla(carry);
  for (int k = eta - 1; k >= 0; --k) c.free_ancilla(w[k]);
}

void check_eta(int eta) {
  if (eta < 1) throw std::invalid_argument("eta must be >= 1");
}

}  // namespace

Circuit build_incrementer_qft(int eta) {
  check_eta(eta);
  Circuit c(eta);
  std::vector<int> q(eta);
  for (int k = 0; k < eta; ++k) q[k] = k;
  append_incrementer_qft(c, q);
  return c;
}

Circuit build_incrementer_ancilla(int eta) {
  if (eta < 2) throw std::invalid_argument("ancilla incrementer requires eta >= 2");
  Circuit c(eta);
  std::vector<int> q(eta);
  for (int k = 0; k < eta; ++k) q[k] = k;
  append_incrementer_ancilla(c, q);
  return c;
}

Circuit build_electric_step_neg(int eta, double t) {
  check_eta(eta);
  Circuit c(eta);
  // Linear part: e^{i(E + I/2)t} as one rotation per qubit.
  for (int j = 0; j < eta; ++j) c.rz(j, static_cast<double>(1LL << j) * t);
  // Quadratic part: all-pairs ZZ rotations through a shared parity chain.
  // At stage j, qubit k>j holds x_k xor x_j.
  if (eta >= 2) {
    for (int k = 1; k < eta; ++k) c.cnot(0, k);
    for (int j = 0; j <= eta - 2; ++j) {
      for (int k = j + 1; k < eta; ++k) c.rz(k, static_cast<double>(1LL << (j + k)) * t);
      if (j < eta - 2) {
        for (int k = j + 2; k < eta; ++k) c.cnot(j + 1, k);
        c.cnot(j, j + 1);
      }
    }
    c.cnot(eta - 2, eta - 1);
  }
  const double four_eta = std::pow(4.0, eta);
  c.phase(-t / 4.0 - t * (four_eta - 1.0) / 12.0);
  return c;
}

Circuit build_adder(int n) {
  if (n < 1) throw std::invalid_argument("adder width must be >= 1");
  Circuit c(2 * n + 1);
  std::vector<int> a(n), b(n);
  for (int i = 0; i < n; ++i) a[i] = i;
  for (int i = 0; i < n; ++i) b[i] = n + i;
  const int carry = c.alloc_ancilla();
  append_ripple_add(c, a, b, 2 * n, carry);
  c.free_ancilla(carry);
  return c;
}

Circuit build_squarer(int eta) {
  check_eta(eta);
  Circuit c(3 * eta);
  std::vector<int> x(eta), acc(2 * eta);
  for (int k = 0; k < eta; ++k) x[k] = k;
  for (int k = 0; k < 2 * eta; ++k) acc[k] = eta + k;
  append_square(c, x, acc);
  return c;
}

Circuit build_electric_step_ft(int eta, double t) {
  check_eta(eta);
  Circuit c(eta);
  const Circuit sq = build_squarer(eta);
  std::vector<int> map(3 * eta);
  for (int k = 0; k < eta; ++k) map[k] = k;
  std::vector<int> acc(2 * eta);
  for (int k = 0; k < 2 * eta; ++k) {
    acc[k] = c.alloc_ancilla();
    map[eta + k] = acc[k];
  }
  c.append_mapped(sq, map);
  for (int m = 0; m < 2 * eta; ++m) c.rz(acc[m], -static_cast<double>(1LL << m) * t);
  for (int m = 0; m < eta; ++m) c.rz(m, static_cast<double>(1LL << (eta + m)) * t);
  c.append_mapped(sq.inverse(), map);
  for (int k = 2 * eta - 1; k >= 0; --k) c.free_ancilla(acc[k]);
  const double lambda2 = std::pow(4.0, eta - 1);
  c.phase(-lambda2 * t - (static_cast<double>(1LL << eta) - 1.0) * t / 2.0);
  return c;
}

Circuit build_hopping_local(int eta, double x, double t, StepMode mode) {
  check_eta(eta);
  Circuit c(eta + 2);
  const int a = eta;      // fermion site r
  const int b = eta + 1;  // fermion site r+1
  const int l0 = 0;       // low link qubit
  const double theta = x * t / 4.0;
  std::vector<int> link(eta);
  for (int k = 0; k < eta; ++k) link[k] = k;

  auto phase_block = [&](double th) {
    c.cnot(l0, a);
    c.cnot(a, b);
    c.rz(a, th);
    c.rz(b, -th);
    c.cnot(a, b);
    c.cnot(l0, a);
  };
  auto increment = [&]() {
    if (mode == StepMode::kNeg)
      append_incrementer_qft(c, link);
    else
      append_incrementer_ancilla(c, link);
  };
  auto decrement = [&]() {
    if (mode == StepMode::kNeg) {
      append_decrementer_qft(c, link);
    } else if (eta == 1) {
      c.x(l0);
    } else {
      c.append_mapped(build_incrementer_ancilla(eta).inverse(), link);
    }
  };

  // Component 1 in the X (x) Bell basis.
  c.cnot(a, b);
  c.h(a);
  c.h(l0);
  phase_block(theta);
  // Component 2: same rotations conjugated by the shift.
  c.h(l0);
  increment();
  c.h(l0);
  phase_block(theta);
  // Components 3 and 4 live in the S-conjugated (Y) bases; the fermionic
  // basis-change CNOT pairs cancel, leaving single-qubit conjugations.
  c.h(a);
  c.sdg(a);
  c.h(a);
  c.h(l0);
  c.sdg(l0);
  c.h(l0);
  phase_block(-theta);
  c.h(l0);
  c.s(l0);
  decrement();
  c.sdg(l0);
  c.h(l0);
  phase_block(-theta);
  c.h(l0);
  c.s(l0);
  c.h(a);
  c.s(a);
  c.cnot(a, b);
  return c;
}

Circuit build_hopping_step(const LatticeParams& p, int r, double t, StepMode mode) {
  if (r < 1 || r > p.n_sites - 1) throw std::invalid_argument("hopping site out of range");
  const RegisterLayout layout = layout_for(p);
  Circuit c(p.total_qubits());
  std::vector<int> map = layout.link_qubits(r);
  map.push_back(layout.site_qubit(r));
  map.push_back(layout.site_qubit(r + 1));
  c.append_mapped(build_hopping_local(p.eta, p.x, t, mode), map);
  return c;
}

Circuit build_mass_step(const LatticeParams& p, int r, double t) {
  if (r < 1 || r > p.n_sites) throw std::invalid_argument("site out of range");
  const RegisterLayout layout = layout_for(p);
  Circuit c(p.total_qubits());
  const double sign = (r % 2 == 0) ? 1.0 : -1.0;
  c.rz(layout.site_qubit(r), -sign * p.mu * t);
  return c;
}

std::vector<TrotterBlockSpec> trotter_step_blocks(const LatticeParams& p, double t,
                                                  StepMode mode) {
  const RegisterLayout layout = layout_for(p);
  std::vector<TrotterBlockSpec> blocks;
  auto mass_local = [&](int r, double time) {
    Circuit c(1);
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    c.rz(0, -sign * p.mu * time);
    blocks.push_back({std::move(c), {layout.site_qubit(r)}});
  };
  auto electric_local = [&](int r, double time) {
    Circuit c = (mode == StepMode::kNeg) ? build_electric_step_neg(p.eta, time)
                                         : build_electric_step_ft(p.eta, time);
    blocks.push_back({std::move(c), layout.link_qubits(r)});
  };
  auto hopping_local = [&](int r, double time, bool reversed) {
    Circuit c = build_hopping_local(p.eta, p.x, reversed ? -time : time, mode);
    if (reversed) c = c.inverse();
    std::vector<int> q = layout.link_qubits(r);
    q.push_back(layout.site_qubit(r));
    q.push_back(layout.site_qubit(r + 1));
    blocks.push_back({std::move(c), std::move(q)});
  };

  for (int r = 1; r <= p.n_sites - 1; ++r) {
    mass_local(r, t / 2);
    electric_local(r, t / 2);
    hopping_local(r, t / 2, false);
  }
  mass_local(p.n_sites, t);
  for (int r = p.n_sites - 1; r >= 1; --r) {
    hopping_local(r, t / 2, true);
    electric_local(r, t / 2);
    mass_local(r, t / 2);
  }
  return blocks;
}

Circuit build_trotter_step(const LatticeParams& p, double t, StepMode mode) {
  Circuit c(p.total_qubits());
  for (const TrotterBlockSpec& block : trotter_step_blocks(p, t, mode))
    c.append_mapped(block.local, block.qubits);
  return c;
}

std::vector<LocalOp> trotter_step_local_ops(const LatticeParams& p, double t) {
  std::vector<LocalOp> ops;
  auto term = [&](TermId::Kind kind, int r, int j, double time) {
    ops.push_back(term_exponential(p, TermId{kind, r, j}, time));
  };
  for (int r = 1; r <= p.n_sites - 1; ++r) {
    term(TermId::kMass, r, 0, t / 2);
    term(TermId::kElectric, r, 0, t / 2);
    for (int j = 1; j <= 4; ++j) term(TermId::kHopping, r, j, t / 2);
  }
  term(TermId::kMass, p.n_sites, 0, t);
  for (int r = p.n_sites - 1; r >= 1; --r) {
    for (int j = 4; j >= 1; --j) term(TermId::kHopping, r, j, t / 2);
    term(TermId::kElectric, r, 0, t / 2);
    term(TermId::kMass, r, 0, t / 2);
  }
  return ops;
}

Matrix trotter_step_dense(const LatticeParams& p, double t, int dense_limit) {
  if (p.total_qubits() > dense_limit)
    throw std::runtime_error("dense dimension guard exceeded for the step product");
  const Eigen::Index dim = Eigen::Index{1} << p.total_qubits();
  Matrix v = Matrix::Identity(dim, dim);
  for (const LocalOp& op : trotter_step_local_ops(p, t)) {
    for (Eigen::Index col = 0; col < dim; ++col) {
      Vector column = v.col(col);
      apply_local_operator(column, op.u, op.qubits);
      v.col(col) = column;
    }
  }
  return v;
}

}  // namespace schwinger
