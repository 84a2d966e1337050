#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "matsuo/errors.hpp"
#include "matsuo/linalg.hpp"
#include "matsuo/matsuo_algebra.hpp"
#include "matsuo/permutation.hpp"
#include "matsuo/transposition_system.hpp"

using namespace matsuo;

namespace {

MatsuoAlgebra symmetric_algebra(int m, Rational alpha = rat(1, 2),
                                Rational beta = rat(1, 2)) {
  return MatsuoAlgebra(build_symmetric(m), std::move(alpha), std::move(beta));
}

AlgebraElement random_element(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> num(-4, 4);
  AlgebraElement v(dim);
  for (auto& c : v) c = rat(num(rng));
  return v;
}

}  // namespace

TEST_CASE("structure constants of the three-point algebra", "[matsuo]") {
  const auto a = symmetric_algebra(3);
  REQUIRE(a.dim() == 3);

  // Squares are twice the axis.
  for (int i = 0; i < 3; ++i) {
    AlgebraElement sq = a.zero();
    sq[i] = 2;
    REQUIRE(a.basis_product(i, i) == sq);
  }
  // All three involutions of S_3 pairwise fail to commute, so every
  // off-diagonal product is (α/2)(x^i + x^j − x^k).
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const int k = 3 - i - j;
      AlgebraElement expect = a.zero();
      expect[i] = rat(1, 4);
      expect[j] = rat(1, 4);
      expect[k] = rat(-1, 4);
      REQUIRE(a.basis_product(i, j) == expect);
      REQUIRE(a.basis_form(i, j) == rat(1, 32));
    }
    REQUIRE(a.basis_form(i, i) == rat(1, 4));
  }
  REQUIRE(a.validation_exhaustive());
}

TEST_CASE("commuting involutions multiply and pair to zero", "[matsuo]") {
  const auto a = symmetric_algebra(4);
  bool found = false;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (i == j || a.system().adjacent(i, j)) continue;
      found = true;
      REQUIRE(is_zero(a.basis_product(i, j)));
      REQUIRE(a.basis_form(i, j) == 0);
    }
  }
  REQUIRE(found);  // disjoint transpositions exist on four points
}

TEST_CASE("products commute and the form associates on dense elements", "[matsuo]") {
  const auto a = symmetric_algebra(4);
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 8; ++trial) {
    const auto u = random_element(rng, a.dim());
    const auto v = random_element(rng, a.dim());
    const auto w = random_element(rng, a.dim());
    REQUIRE(a.multiply(u, v) == a.multiply(v, u));
    REQUIRE(a.form(u, v) == a.form(v, u));
    // The two sides exercise multiply() + form(), independent of the
    // sparse per-triple check used at construction time.
    REQUIRE(a.form(a.multiply(u, v), w) == a.form(u, a.multiply(v, w)));
  }
  REQUIRE_NOTHROW(a.verify_invariance());
  REQUIRE_NOTHROW(a.verify_rho_automorphisms());
}

TEST_CASE("rho permutes axes by conjugation", "[matsuo]") {
  const auto a = symmetric_algebra(4);
  std::mt19937_64 rng(77);
  for (int t = 0; t < a.dim(); ++t) {
    for (int j = 0; j < a.dim(); ++j) {
      const auto moved = a.rho(t, a.basis_element(j));
      REQUIRE(moved == a.basis_element(a.system().circ(t, j)));
      // ρ_t is an automorphism: transported products match.
      const auto lhs = a.rho(t, a.basis_product(t, j));
      const auto rhs = a.multiply(a.rho(t, a.basis_element(t)),
                                  a.rho(t, a.basis_element(j)));
      REQUIRE(lhs == rhs);
    }
    // ρ_t is an involution on arbitrary elements.
    const auto v = random_element(rng, a.dim());
    REQUIRE(a.rho(t, a.rho(t, v)) == v);
  }
}

TEST_CASE("rho satisfies the braid relation on adjacent pairs", "[matsuo]") {
  const auto a = symmetric_algebra(4);
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (!a.system().adjacent(i, j)) continue;
      const int ij = a.system().circ(i, j);
      for (int k = 0; k < a.dim(); ++k) {
        const auto e = a.basis_element(k);
        REQUIRE(a.rho(i, a.rho(j, a.rho(i, e))) == a.rho(ij, e));
      }
    }
  }
}

TEST_CASE("adjoint eigenspaces of a six-point axis", "[matsuo]") {
  const auto a = symmetric_algebra(4);
  const int axis = 0;
  const auto eig = a.adjoint_eigenspaces(axis);
  REQUIRE(eig.at_two.size() == 1);
  REQUIRE(eig.at_zero.size() == 3);
  REQUIRE(eig.at_alpha.size() == 2);

  // Independent eigenvector check straight against the multiplication.
  const auto x = a.basis_element(axis);
  auto check = [&](const AlgebraElement& v, const Rational& lambda) {
    AlgebraElement scaled = v;
    for (auto& c : scaled) c *= lambda;
    REQUIRE(a.multiply(x, v) == scaled);
  };
  for (const auto& v : eig.at_two) check(v, 2);
  for (const auto& v : eig.at_zero) check(v, 0);
  for (const auto& v : eig.at_alpha) check(v, a.alpha());

  // Distinct eigenvalues are orthogonal for an associating form.
  for (const auto& u : eig.at_two) {
    for (const auto& v : eig.at_zero) REQUIRE(a.form(u, v) == 0);
    for (const auto& v : eig.at_alpha) REQUIRE(a.form(u, v) == 0);
  }
  for (const auto& u : eig.at_zero) {
    for (const auto& v : eig.at_alpha) REQUIRE(a.form(u, v) == 0);
  }

  REQUIRE_THROWS_AS(symmetric_algebra(3, rat(2), rat(1)).adjoint_eigenspaces(0),
                    DegenerateParameter);
}

TEST_CASE("adjoint eigenspace dimensions at other sizes", "[matsuo]") {
  const auto tiny = symmetric_algebra(2).adjoint_eigenspaces(0);
  REQUIRE(tiny.at_two.size() == 1);
  REQUIRE(tiny.at_zero.empty());
  REQUIRE(tiny.at_alpha.empty());

  const auto three = symmetric_algebra(3).adjoint_eigenspaces(1);
  REQUIRE(three.at_two.size() == 1);
  REQUIRE(three.at_zero.size() == 1);
  REQUIRE(three.at_alpha.size() == 1);
}

TEST_CASE("conformal vector and central charge", "[matsuo]") {
  // One point: ω is the unique axis, weight 1/2.
  const auto a2 = symmetric_algebra(2);
  REQUIRE(a2.conformal_coefficient() == 1);
  REQUIRE(a2.central_charge() == rat(1, 2));

  const auto a3 = symmetric_algebra(3);
  REQUIRE(a3.conformal_coefficient() == rat(4, 5));
  REQUIRE(a3.conformal_vector() == AlgebraElement(3, rat(4, 5)));
  REQUIRE(a3.central_charge() == rat(6, 5));

  const auto a4 = symmetric_algebra(4);
  REQUIRE(a4.conformal_coefficient() == rat(2, 3));
  REQUIRE(a4.central_charge() == 2);

  // n(n+1)/(n+3) for the m = n+1 point case.
  for (int m = 2; m <= 7; ++m) {
    const int n = m - 1;
    REQUIRE(symmetric_algebra(m).central_charge() ==
            rat(n * (n + 1), n + 3));
  }
}

TEST_CASE("form report of the generic three-point algebra", "[matsuo]") {
  const auto report = symmetric_algebra(3).form_report();
  REQUIRE(report.dim == 3);
  REQUIRE(report.rank == 3);
  REQUIRE(report.nullity == 0);
  REQUIRE(report.signature == Signature{3, 0, 0});
  REQUIRE(report.radical_basis.empty());
}

TEST_CASE("degenerate parameters produce a radical and a tiny quotient", "[matsuo]") {
  const auto a = symmetric_algebra(3, rat(4), rat(1));
  const auto report = a.form_report();
  REQUIRE(report.rank == 1);
  REQUIRE(report.nullity == 2);
  REQUIRE(report.signature == Signature{1, 0, 2});
  for (const auto& v : report.radical_basis) {
    for (int i = 0; i < a.dim(); ++i) {
      REQUIRE(a.form(a.basis_element(i), v) == 0);
    }
  }

  const auto q = nondegenerate_quotient(a.tables());
  REQUIRE(q.dim == 1);
  REQUIRE(q.product[0][0] == AlgebraElement{rat(2)});
  REQUIRE(q.gram == QMat{{rat(1, 2)}});

  // Quotienting an already nondegenerate algebra changes nothing.
  const auto t3 = symmetric_algebra(3).tables();
  const auto q3 = nondegenerate_quotient(t3);
  REQUIRE(q3.dim == 3);
  REQUIRE(q3.basis_labels == std::vector<int>{0, 1, 2});
  REQUIRE(q3.gram == t3.gram);
  REQUIRE(q3.product == t3.product);
  const auto q3_again = nondegenerate_quotient(q3);
  REQUIRE(q3_again.dim == q3.dim);
  REQUIRE(q3_again.gram == q3.gram);
}

TEST_CASE("form data is invariant under relabelling the points", "[matsuo]") {
  std::mt19937_64 rng(2026);
  const auto base = symmetric_algebra(4, rat(1, 3), rat(2));
  const auto base_report = base.form_report();
  std::vector<int> img(4);
  std::iota(img.begin(), img.end(), 0);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation g = Permutation::from_images(img);
    std::vector<Permutation> moved;
    for (const auto& t : base.system().involutions()) {
      moved.push_back(t.conjugated_by(g));
    }
    const MatsuoAlgebra relabelled(TranspositionSystem(moved), rat(1, 3),
                                   rat(2));
    const auto report = relabelled.form_report();
    REQUIRE(report.rank == base_report.rank);
    REQUIRE(report.nullity == base_report.nullity);
    REQUIRE(report.signature == base_report.signature);
    REQUIRE(relabelled.central_charge() == base.central_charge());
  }
}

TEST_CASE("decomposable systems split and lack a conformal vector", "[matsuo]") {
  const auto sys = TranspositionSystem::from_generators(
      {parse_cycles("(0 1)", 4), parse_cycles("(2 3)", 4)});
  const MatsuoAlgebra a(sys, rat(1, 2), rat(1, 2));
  REQUIRE(a.decompose() == std::vector<std::vector<int>>{{0}, {1}});
  REQUIRE_THROWS_AS(a.central_charge(), Decomposable);
  REQUIRE_THROWS_AS(a.conformal_vector(), Decomposable);
  const auto report = a.form_report();
  REQUIRE(report.rank == 2);
  REQUIRE(report.signature == Signature{2, 0, 0});
  REQUIRE_FALSE(a.rho_is_faithful());

  // Two disjoint triangles: two three-dimensional summands.
  const auto twin = TranspositionSystem::from_generators(
      {parse_cycles("(0 1)", 6), parse_cycles("(1 2)", 6),
       parse_cycles("(3 4)", 6), parse_cycles("(4 5)", 6)});
  const MatsuoAlgebra pair(twin, rat(1, 2), rat(1, 2));
  const auto parts = pair.decompose();
  REQUIRE(parts.size() == 2);
  REQUIRE(parts[0].size() == 3);
  REQUIRE(parts[1].size() == 3);
  const auto reg = regularity(twin);
  REQUIRE(reg.k == 2);  // both triangles are 2-regular
  REQUIRE_THROWS_AS(pair.conformal_vector(), Decomposable);
}

TEST_CASE("rho action is faithful exactly for centre-free groups", "[matsuo]") {
  REQUIRE(symmetric_algebra(3).rho_is_faithful());
  REQUIRE(symmetric_algebra(4).rho_is_faithful());
  REQUIRE(symmetric_algebra(5).rho_is_faithful());
  // One involution: the generated Z_2 centralizes everything.
  REQUIRE_FALSE(symmetric_algebra(2).rho_is_faithful());
}

TEST_CASE("singular parameters are reported, not divided by", "[matsuo]") {
  // k = 2 for three points, so α = −2 makes kα + 4 vanish.
  const auto a = symmetric_algebra(3, rat(-2), rat(1));
  REQUIRE_THROWS_AS(a.conformal_coefficient(), SingularParameter);
  REQUIRE_THROWS_AS(a.central_charge(), SingularParameter);
}

TEST_CASE("constructor rejects bad input", "[matsuo]") {
  REQUIRE_THROWS_AS(symmetric_algebra(3, rat(0), rat(1)), InvalidParameter);
  REQUIRE_THROWS_AS(symmetric_algebra(3, rat(1), rat(0)), InvalidParameter);
  const auto bad = close_under_conjugation(
      {parse_cycles("(0 1)", 5), parse_cycles("(1 2)(3 4)", 5)});
  REQUIRE_THROWS_AS(MatsuoAlgebra(TranspositionSystem(bad), rat(1, 2), rat(1, 2)),
                    InvalidParameter);
  const auto good = symmetric_algebra(3);
  REQUIRE_THROWS_AS(good.multiply(AlgebraElement(2, 0), good.zero()),
                    ShapeError);
}

TEST_CASE("large algebras fall back to sampled validation", "[matsuo]") {
  const MatsuoAlgebra big(build_symmetric(12), rat(1, 2), rat(1, 2), 99);
  REQUIRE(big.dim() == 66);
  REQUIRE_FALSE(big.validation_exhaustive());
  REQUIRE(big.validation_seed() == 99);
  // The exhaustive pass still holds; sampling just defers it.
  REQUIRE_NOTHROW(big.verify_invariance());
}
