#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "matsuo/errors.hpp"
#include "matsuo/linalg.hpp"
#include "matsuo/permutation.hpp"
#include "matsuo/zhu.hpp"

using namespace matsuo;

namespace {

/// Oracle: the two-sided span computed the expensive way, by translating
/// every seed with *every* group element on both sides at once.
int brute_force_ideal_dim(const SymmetricGroupAlgebra& algebra,
                          const std::vector<QVec>& seeds) {
  RowEchelon span(static_cast<int>(algebra.order()));
  for (const auto& seed : seeds) {
    for (std::size_t g = 0; g < algebra.order(); ++g) {
      const QVec left = algebra.act_left(algebra.element(g), seed);
      for (std::size_t h = 0; h < algebra.order(); ++h) {
        span.insert(algebra.act_right(left, algebra.element(h)));
      }
    }
  }
  return span.rank();
}

}  // namespace

TEST_CASE("group algebra indexing round-trips", "[zhu]") {
  for (int m = 1; m <= 5; ++m) {
    const SymmetricGroupAlgebra algebra(m);
    std::size_t expected = 1;
    for (int i = 2; i <= m; ++i) expected *= static_cast<std::size_t>(i);
    REQUIRE(algebra.order() == expected);
    for (std::size_t i = 0; i < algebra.order(); ++i) {
      REQUIRE(algebra.index_of(algebra.element(i)) == i);
      if (i + 1 < algebra.order()) {
        REQUIRE(algebra.element(i) < algebra.element(i + 1));
      }
    }
  }
  REQUIRE_THROWS_AS(SymmetricGroupAlgebra(0), InvalidSize);
  REQUIRE_THROWS_AS(SymmetricGroupAlgebra(7, 720), BudgetExceeded);
  const SymmetricGroupAlgebra a3(3);
  REQUIRE_THROWS_AS(a3.index_of(parse_cycles("(0 1)", 4)), ShapeError);
  REQUIRE_THROWS_AS(a3.act_left(parse_cycles("(0 1)", 3), QVec(5, 0)),
                    ShapeError);
}

TEST_CASE("convolution is associative with unit", "[zhu]") {
  const SymmetricGroupAlgebra algebra(3);
  const QVec unit = algebra.basis(parse_cycles("()", 3));
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_vec = [&] {
    QVec v = algebra.zero();
    for (auto& c : v) c = rat(coeff(rng));
    return v;
  };
  for (int trial = 0; trial < 5; ++trial) {
    const QVec u = random_vec(), v = random_vec(), w = random_vec();
    REQUIRE(algebra.convolve(unit, u) == u);
    REQUIRE(algebra.convolve(u, unit) == u);
    REQUIRE(algebra.convolve(algebra.convolve(u, v), w) ==
            algebra.convolve(u, algebra.convolve(v, w)));
    // One-sided translations are convolutions by basis vectors.
    const Permutation g = algebra.element(rng() % algebra.order());
    REQUIRE(algebra.act_left(g, u) == algebra.convolve(algebra.basis(g), u));
    REQUIRE(algebra.act_right(u, g) == algebra.convolve(u, algebra.basis(g)));
  }
}

TEST_CASE("ideal generators per non-commuting pair", "[zhu]") {
  REQUIRE(ideal_generators(SymmetricGroupAlgebra(2)).empty());
  REQUIRE(ideal_generators(SymmetricGroupAlgebra(3)).size() == 3);
  REQUIRE(ideal_generators(SymmetricGroupAlgebra(4)).size() == 12);

  // For three points every generator collapses to the same signed sum:
  // w is the sum of all three transpositions, w² = 3·(even part), so
  // w(w−3) = 3·(even − odd).  Element order is lexicographic:
  // e, (1 2), (0 1), (0 1 2), (0 2 1), (0 2).
  const SymmetricGroupAlgebra a3(3);
  const QVec expected = {rat(3), rat(-3), rat(-3), rat(3), rat(3), rat(-3)};
  for (const auto& gen : ideal_generators(a3)) {
    REQUIRE(gen == expected);
  }
}

TEST_CASE("saturated span matches the brute-force two-sided span", "[zhu]") {
  for (int points : {3, 4}) {
    const SymmetricGroupAlgebra algebra(points);
    const auto gens = ideal_generators(algebra);
    const RowEchelon fast = saturate_two_sided(algebra, gens);
    REQUIRE(fast.rank() == brute_force_ideal_dim(algebra, gens));
    REQUIRE(verify_saturated(algebra, fast));
  }
}

TEST_CASE("quotient dimensions at small rank", "[zhu]") {
  const QuotientReport r1 = quotient_dimension(1);
  REQUIRE(r1.group_order == 2);
  REQUIRE(r1.ideal_dim == 0);
  REQUIRE(r1.quotient_dim == 2);
  REQUIRE(r1.basis.size() == 2);
  REQUIRE(r1.saturation_verified);

  const QuotientReport r2 = quotient_dimension(2);
  REQUIRE(r2.group_order == 6);
  REQUIRE(r2.ideal_dim == 1);
  REQUIRE(r2.quotient_dim == 5);
  REQUIRE(r2.basis.size() == 5);
  REQUIRE(r2.saturation_verified);

  const QuotientReport r3 = quotient_dimension(3);
  REQUIRE(r3.group_order == 24);
  REQUIRE(r3.ideal_dim == 10);
  REQUIRE(r3.quotient_dim == 14);
  REQUIRE(r3.saturation_verified);

  REQUIRE_THROWS_AS(quotient_dimension(0), InvalidSeries);
  REQUIRE_THROWS_AS(quotient_dimension(6), BudgetExceeded);
}

TEST_CASE("saturation rank ignores seed order", "[zhu]") {
  const SymmetricGroupAlgebra algebra(4);
  auto gens = ideal_generators(algebra);
  const int reference = saturate_two_sided(algebra, gens).rank();

  std::vector<QVec> reversed(gens.rbegin(), gens.rend());
  REQUIRE(saturate_two_sided(algebra, reversed).rank() == reference);

  std::mt19937_64 rng(20260823);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    REQUIRE(saturate_two_sided(algebra, gens).rank() == reference);
  }
}

TEST_CASE("sector counts sit next to quotient dimensions", "[zhu]") {
  const auto c1 = cross_check_sector_count(1);
  REQUIRE(c1.quotient_dim == 2);
  REQUIRE(c1.sectors == std::vector<int>{0, 2});
  const auto c2 = cross_check_sector_count(2);
  REQUIRE(c2.quotient_dim == 5);
  REQUIRE(c2.sectors == std::vector<int>{0, 2});
  const auto c3 = cross_check_sector_count(3);
  REQUIRE(c3.quotient_dim == 14);
  REQUIRE(c3.sectors == std::vector<int>{0, 2, 4});
}
