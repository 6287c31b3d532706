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

#include "schwinger/lattice.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <set>

#include "testutil.hpp"

using namespace schwinger;
using schwinger::test::basis_state;

namespace {

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

TEST_CASE("parameter validation") {
  const LatticeParams small = validate_params(2, 1, 1.0, 1.0);
  CHECK(small.eta == 1);
  CHECK(small.total_qubits() == 3);

  const LatticeParams wide = validate_params(4, 4, 0.5, 0.0);
  CHECK(wide.eta == 3);
  CHECK(wide.total_qubits() == 13);

  CHECK_THROWS_WITH(validate_params(3, 1, 1.0, 1.0), Catch::Matchers::ContainsSubstring("even"));
  CHECK_THROWS(validate_params(2, 3, 1.0, 1.0));
  CHECK_THROWS(validate_params(2, 1, 0.0, 1.0));
  CHECK_THROWS(validate_params(2, 1, -1.0, 1.0));
  CHECK_THROWS(validate_params(2, 1, 1.0, -0.5));
}

TEST_CASE("register layout is a bijection") {
  const LatticeParams p = validate_params(4, 2, 1.0, 1.0);
  const RegisterLayout layout = layout_for(p);
  std::set<int> seen;
  for (int r = 1; r <= p.n_sites; ++r) seen.insert(layout.site_qubit(r));
  for (int r = 1; r <= p.n_sites - 1; ++r)
    for (int k = 0; k < p.eta; ++k) seen.insert(layout.link_qubit(r, k));
  REQUIRE(static_cast<int>(seen.size()) == layout.total_qubits());
  CHECK(*seen.begin() == 0);
  CHECK(*seen.rbegin() == layout.total_qubits() - 1);
}

TEST_CASE("link operators") {
  SECTION("eta = 1") {
    const Matrix e = link_e_operator(1);
    CHECK(e(0, 0) == Complex(-1.0));
    CHECK(e(1, 1) == Complex(0.0));
    const Matrix u = link_u_operator(1);
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    CHECK((u - x).cwiseAbs().maxCoeff() == 0.0);
  }
  SECTION("eta = 2 spectrum and wrap") {
    const Matrix e = link_e_operator(2);
    for (int j = 0; j < 4; ++j) CHECK(e(j, j) == Complex(j - 2.0));
    const Matrix u = link_u_operator(2);
    Vector top = basis_state(2, 3);
    CHECK((u * top - basis_state(2, 0)).norm() == 0.0);
  }
  SECTION("truncated commutation relation is exact") {
    for (int eta = 1; eta <= 3; ++eta) {
      const Eigen::Index dim = Eigen::Index{1} << eta;
      const long long lambda = dim / 2;
      const Matrix e = link_e_operator(eta);
      const Matrix u = link_u_operator(eta);
      Matrix wrap = Matrix::Zero(dim, dim);
      wrap(0, dim - 1) = static_cast<double>(2 * lambda);
      CHECK((commutator(e, u) - (u - wrap)).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("terms") {
  SECTION("mass term at site 1 with mu = 1") {
    const LatticeParams p = validate_params(2, 1, 1.0, 1.0);
    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    const Matrix expected = embed_operator(0.5 * z, {0}, 3);
    const Matrix got = build_term(p, {TermId::kMass, 1, 0});
    CHECK((got - expected).cwiseAbs().maxCoeff() <= 1e-15);
  }
  SECTION("hopping component norms are x/2") {
    for (long long cutoff : {1LL, 2LL}) {
      for (double x : {0.5, 1.0, 2.0}) {
        const LatticeParams p = validate_params(4, cutoff, x, 1.0);
        for (int r = 1; r <= 3; ++r)
          for (int j = 1; j <= 4; ++j) {
            const double norm = spectral_norm(term_local_matrix(p, {TermId::kHopping, r, j}));
            CHECK(norm == Catch::Approx(x / 2).margin(1e-12));
          }
      }
    }
  }
  SECTION("no electric term on the last site") {
    const LatticeParams p = validate_params(2, 1, 1.0, 1.0);
    for (const TermId& id : enumerate_terms(p))
      if (id.kind == TermId::kElectric) CHECK(id.site <= p.n_sites - 1);
    CHECK_THROWS(build_term(p, {TermId::kElectric, 2, 0}));
  }
}

TEST_CASE("dense hamiltonian") {
  SECTION("x = 0 assembles to mass plus electric only") {
    const LatticeParams p = LatticeParams::unchecked(2, 1, 0.0, 1.0);
    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    const Matrix e = link_e_operator(1);
    const Matrix expected = embed_operator(Matrix(e * e), {1}, 3) +
                            embed_operator(0.5 * z, {0}, 3) + embed_operator(-0.5 * z, {2}, 3);
    CHECK((build_dense_hamiltonian(p) - expected).cwiseAbs().maxCoeff() <= 1e-14);
  }
  SECTION("hermitian and decomposition-complete") {
    for (const auto& [n, cutoff] : std::vector<std::pair<int, long long>>{{2, 1}, {2, 2}, {4, 1}}) {
      const LatticeParams p = validate_params(n, cutoff, 0.7, 0.3);
      const Matrix h = build_dense_hamiltonian(p);
      CHECK(is_hermitian(h, 1e-12));
      Matrix sum = Matrix::Zero(h.rows(), h.cols());
      for (const TermId& id : enumerate_terms(p)) sum += build_term(p, id);
      CHECK((h - sum).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
  SECTION("fermion number is conserved") {
    for (const auto& [n, cutoff] : std::vector<std::pair<int, long long>>{{2, 2}, {4, 1}}) {
      const LatticeParams p = validate_params(n, cutoff, 1.0, 1.0);
      const Matrix h = build_dense_hamiltonian(p);
      const Matrix nf = fermion_number_operator(p);
      CHECK(spectral_norm(commutator(h, nf)) <= 1e-10);
    }
  }
  SECTION("dimension guard") {
    const LatticeParams p = validate_params(4, 8, 1.0, 1.0);  // 4 + 3*4 = 16 qubits
    CHECK_THROWS_WITH(build_dense_hamiltonian(p), Catch::Matchers::ContainsSubstring("guard"));
  }
}

TEST_CASE("term commutation structure") {
  const LatticeParams p = validate_params(4, 1, 1.0, 1.0);
  SECTION("hopping terms separated by two sites commute") {
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k) {
        const Matrix a = build_term(p, {TermId::kHopping, 1, j});
        const Matrix b = build_term(p, {TermId::kHopping, 3, k});
        CHECK(spectral_norm(commutator(a, b)) <= 1e-12);
      }
  }
  SECTION("diagonal terms always commute") {
    for (int r = 1; r <= 4; ++r)
      for (int s = 1; s <= 4; ++s) {
        Matrix dr = build_term(p, {TermId::kMass, r, 0});
        if (r < 4) dr += build_term(p, {TermId::kElectric, r, 0});
        Matrix ds = build_term(p, {TermId::kMass, s, 0});
        if (s < 4) ds += build_term(p, {TermId::kElectric, s, 0});
        CHECK(spectral_norm(commutator(dr, ds)) <= 1e-12);
      }
  }
}

TEST_CASE("exact propagator") {
  SECTION("zero time is the identity") {
    const LatticeParams p = validate_params(2, 1, 1.0, 1.0);
    const Matrix h = build_dense_hamiltonian(p);
    const Matrix u = exact_propagator(h, 0.0);
    CHECK((u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= 1e-12);
  }
  SECTION("z rotation analytic case") {
    Matrix z(2, 2);
    z << 0.5, 0, 0, -0.5;
    const Matrix u = exact_propagator(z, M_PI);
    CHECK(std::abs(u(0, 0) - std::polar(1.0, -M_PI / 2)) <= 1e-12);
    CHECK(std::abs(u(1, 1) - std::polar(1.0, M_PI / 2)) <= 1e-12);
  }
  SECTION("unitarity") {
    const LatticeParams p = validate_params(2, 2, 0.8, 0.4);
    const Matrix h = build_dense_hamiltonian(p);
    const Matrix u = exact_propagator(h, 0.37);
    CHECK(is_unitary(u, 1e-12));
    CHECK((u * exact_propagator(h, -0.37) - Matrix::Identity(u.rows(), u.cols()))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
  }
  SECTION("rejects non-hermitian input") {
    Matrix bad(2, 2);
    bad << 0, 1, 0, 0;
    CHECK_THROWS(exact_propagator(bad, 1.0));
  }
}

TEST_CASE("gauss operators") {
  SECTION("staggered vacuum is annihilated") {
    for (const auto& [n, cutoff] : std::vector<std::pair<int, long long>>{{2, 1}, {4, 2}}) {
      const LatticeParams p = validate_params(n, cutoff, 1.0, 1.0);
      const Eigen::Index vac = staggered_vacuum_index(p);
      for (int r = 1; r <= p.n_sites; ++r) {
        const Matrix g = gauss_operator(p, r);
        CHECK(std::abs(g(vac, vac)) == 0.0);
      }
    }
  }
  SECTION("diagonal charge mismatch values") {
    const LatticeParams p = validate_params(2, 1, 1.0, 1.0);
    const RegisterLayout layout = layout_for(p);
    // Links at epsilon = 0, site 1 occupied: both generators vanish.
    Eigen::Index idx = staggered_vacuum_index(p);
    CHECK(std::abs(gauss_operator(p, 1)(idx, idx)) == 0.0);
    CHECK(std::abs(gauss_operator(p, 2)(idx, idx)) == 0.0);
    // A positron without flux: site 2 occupied too, G_2 = -1.
    idx |= Eigen::Index{1} << layout.site_qubit(2);
    CHECK(gauss_operator(p, 2)(idx, idx) == Complex(-1.0));
  }
  SECTION("commutes with H on the cutoff interior") {
    const LatticeParams p = validate_params(2, 2, 1.0, 1.0);
    const RegisterLayout layout = layout_for(p);
    const Matrix h = build_dense_hamiltonian(p);
    const Eigen::Index dim = h.rows();
    auto interior = [&](Eigen::Index idx) {
      for (int r = 1; r <= p.n_sites - 1; ++r) {
        long long j = 0;
        for (int k = 0; k < p.eta; ++k) j |= ((idx >> layout.link_qubit(r, k)) & 1) << k;
        const long long eps = j - p.cutoff;
        if (eps < -p.cutoff + 1 || eps > p.cutoff - 2) return false;
      }
      return true;
    };
    for (int r = 1; r <= p.n_sites; ++r) {
      const Matrix c = commutator(h, gauss_operator(p, r));
      for (Eigen::Index a = 0; a < dim; ++a)
        for (Eigen::Index b = 0; b < dim; ++b)
          if (interior(a) && interior(b)) CHECK(std::abs(c(a, b)) <= 1e-12);
    }
  }
}

TEST_CASE("pair number operator") {
  const LatticeParams p = validate_params(4, 1, 1.0, 1.0);
  const RegisterLayout layout = layout_for(p);
  const Matrix np = pair_number_operator(p);
  SECTION("extremes and a single positron") {
    CHECK(np(0, 0) == Complex(0.0));
    Eigen::Index full = 0;
    for (int r = 2; r <= 4; r += 2) full |= Eigen::Index{1} << layout.site_qubit(r);
    CHECK(np(full, full) == Complex(2.0));  // N/2
    const Eigen::Index one = Eigen::Index{1} << layout.site_qubit(2);
    CHECK(np(one, one) == Complex(1.0));
  }
  SECTION("norm is N/2") { CHECK(spectral_norm(np) == Catch::Approx(2.0).margin(1e-12)); }
}

TEST_CASE("hopping eigen action") {
  // The first hopping component acts on |+> (x basis) times a Bell pair with
  // phases e^{+- i x t/4}.
  const double x = 1.3, t = 0.7;
  const LatticeParams p = validate_params(2, 1, x, 0.0);
  const LocalOp op = term_exponential(p, {TermId::kHopping, 1, 1}, t / 2);
  Vector psi = Vector::Zero(8);
  // |+> on the link qubit (local bit 0), singlet-like |beta_11> on the sites.
  const double inv = 0.5;  // 1/sqrt(2) * 1/sqrt(2)
  psi(0 + 2 * 0 + 4 * 1) = inv;   // |0>|01>
  psi(1 + 2 * 0 + 4 * 1) = inv;   // |1>|01>
  psi(0 + 2 * 1 + 4 * 0) = -inv;  // |0>|10>
  psi(1 + 2 * 1 + 4 * 0) = -inv;  // |1>|10>
  Vector out = psi;
  Matrix u = op.u;
  out = u * psi;
  const Complex expected = std::polar(1.0, x * t / 4.0);
  CHECK((out - expected * psi).norm() <= 1e-12);
}
