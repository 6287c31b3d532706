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

#ifndef SCHWINGER_LATTICE_HPP
#define SCHWINGER_LATTICE_HPP

#include <string>
#include <vector>

#include "schwinger/linalg.hpp"

namespace schwinger {

/// Parameters of the staggered lattice: N fermionic sites (N/2 physical
/// sites), electric cutoff Lambda = 2^(eta-1) per link, coupling x = 1/(ag)^2
/// and mass mu = 2m/(ag^2). The register holds N site qubits plus eta qubits
/// per link, N + (N-1)*eta in total.
struct LatticeParams {
  int n_sites = 2;    // N, even and >= 2 for validated instances
  long long cutoff = 1;  // Lambda, a power of two
  int eta = 1;        // qubits per link, log2(2*Lambda)
  double x = 1.0;
  double mu = 0.0;

  int total_qubits() const { return n_sites + (n_sites - 1) * eta; }

  /// Construction for interior sweeps that need odd N (the bound checks run
  /// on 3-site windows); skips the even-N check but keeps the others.
  static LatticeParams unchecked(int n_sites, long long cutoff, double x, double mu);
};

/// Validates raw values: N even and >= 2, Lambda a power of two >= 1, x > 0,
/// mu >= 0. Throws std::invalid_argument with a specific message otherwise.
LatticeParams validate_params(int n_sites, long long cutoff, double x, double mu);

/// Site/link to global qubit index map. Sites and links interleave:
/// site 1, link 1, site 2, link 2, ..., site N. Little-endian within links
/// (qubit k of a link carries binary weight 2^k).
struct RegisterLayout {
  int n_sites = 0;
  int eta = 0;

  int site_qubit(int r) const { return (r - 1) * (1 + eta); }
  int link_qubit(int r, int k) const { return (r - 1) * (1 + eta) + 1 + k; }
  std::vector<int> link_qubits(int r) const;
  int total_qubits() const { return n_sites + (n_sites - 1) * eta; }
};

RegisterLayout layout_for(const LatticeParams& p);

/// Electric field operator on one link: diag(j - Lambda) for j = 0..2Lambda-1.
Matrix link_e_operator(int eta);

/// Raising operator with periodic wrap: |j> -> |j+1 mod 2Lambda>.
Matrix link_u_operator(int eta);

/// Identifies one summand of the Hamiltonian splitting.
struct TermId {
  enum Kind { kHopping, kMass, kElectric } kind = kMass;
  int site = 1;      // r
  int component = 0; // 1..4 for hopping terms, unused otherwise
};

/// All terms of the splitting for the given lattice, in site order:
/// for each r: mass(r), electric(r) [r < N], hopping(r, 1..4) [r < N].
std::vector<TermId> enumerate_terms(const LatticeParams& p);

/// Global qubits supporting a term, in the local bit order used by
/// term_local_matrix.
std::vector<int> term_support(const LatticeParams& p, const TermId& id);

/// The term as a dense operator on its own support only. For hopping terms
/// the local register is [link qubits 0..eta-1, site r, site r+1].
Matrix term_local_matrix(const LatticeParams& p, const TermId& id);

/// The term embedded in the full register. Guarded by the dense limit.
Matrix build_term(const LatticeParams& p, const TermId& id, int dense_limit = kDefaultDenseLimit);

/// Sum of all terms; Hermitian.
Matrix build_dense_hamiltonian(const LatticeParams& p, int dense_limit = kDefaultDenseLimit);

/// e^{-iHt} by eigendecomposition. Throws on non-Hermitian input.
Matrix exact_propagator(const Matrix& h, double t);

/// Gauss-law generator G_r = E_r - E_{r-1} - rho_r with open boundaries
/// (E_0 = E_N = 0) and rho_r = n_r + ((-1)^r - 1)/2. Diagonal.
Matrix gauss_operator(const LatticeParams& p, int r, int dense_limit = kDefaultDenseLimit);

/// Positron number operator: sum over even sites of (I - Z_r)/2. Diagonal,
/// eigenvalues 0..N/2.
Matrix pair_number_operator(const LatticeParams& p, int dense_limit = kDefaultDenseLimit);

/// Diagonal of the positron number operator, cheap form for sampling.
std::vector<double> pair_number_diagonal(const LatticeParams& p);

/// Total fermion number sum_r (I - Z_r)/2; commutes with H.
Matrix fermion_number_operator(const LatticeParams& p, int dense_limit = kDefaultDenseLimit);

/// Basis index of the staggered vacuum: all links at epsilon = 0, odd sites
/// occupied, even sites empty.
Eigen::Index staggered_vacuum_index(const LatticeParams& p);

/// exp(-i * term * t) as a local operator on the term's support.
LocalOp term_exponential(const LatticeParams& p, const TermId& id, double t);

}  // namespace schwinger

#endif  // SCHWINGER_LATTICE_HPP
