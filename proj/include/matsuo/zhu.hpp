#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "matsuo/errors.hpp"
#include "matsuo/linalg.hpp"
#include "matsuo/permutation.hpp"
#include "matsuo/rational.hpp"
#include "matsuo/transposition_system.hpp"
#include "matsuo/virasoro.hpp"

namespace matsuo {

/// Default cap on the group-algebra dimension (m! for m points).
inline constexpr std::size_t kDefaultZhuBudget = 720;

/// The rational group algebra of the symmetric group on `points` points,
/// with the full element list materialized in lexicographic order.
/// Elements of the algebra are dense coefficient vectors indexed by the
/// lexicographic rank of the group element.
class SymmetricGroupAlgebra {
 public:
  explicit SymmetricGroupAlgebra(int points,
                                 std::size_t dimension_budget = kDefaultZhuBudget)
      : points_(points) {
    if (points < 1) {
      throw InvalidSize("group algebra needs at least 1 point");
    }
    std::size_t order = 1;
    for (int i = 2; i <= points; ++i) {
      order *= static_cast<std::size_t>(i);
      if (order > dimension_budget) {
        throw BudgetExceeded("group algebra dimension " + std::to_string(order) +
                             "+ exceeds budget " +
                             std::to_string(dimension_budget));
      }
    }
    std::vector<int> images(points);
    for (int i = 0; i < points; ++i) images[i] = i;
    do {
      elements_.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
  }

  int points() const { return points_; }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(std::size_t index) const {
    return elements_[index];
  }

  /// Lexicographic rank of g among all permutations (factorial base).
  std::size_t index_of(const Permutation& g) const {
    if (g.degree() != points_) {
      throw ShapeError("permutation degree does not match the group");
    }
    std::size_t rank = 0;
    std::size_t base = order();
    const auto& img = g.images();
    for (int i = 0; i < points_; ++i) {
      base /= static_cast<std::size_t>(points_ - i);
      std::size_t smaller = 0;
      for (int j = i + 1; j < points_; ++j) {
        if (img[j] < img[i]) ++smaller;
      }
      rank += smaller * base;
    }
    return rank;
  }

  QVec zero() const { return QVec(order(), 0); }

  QVec basis(const Permutation& g) const {
    QVec v = zero();
    v[index_of(g)] = 1;
    return v;
  }

  /// g · v (left translation of coefficients).
  QVec act_left(const Permutation& g, const QVec& v) const {
    check(v);
    QVec out = zero();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) out[index_of(g * elements_[i])] = v[i];
    }
    return out;
  }

  /// v · g (right translation of coefficients).
  QVec act_right(const QVec& v, const Permutation& g) const {
    check(v);
    QVec out = zero();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) out[index_of(elements_[i] * g)] = v[i];
    }
    return out;
  }

  /// Full convolution product.
  QVec convolve(const QVec& u, const QVec& v) const {
    check(u);
    check(v);
    QVec out = zero();
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] != 0) out[index_of(elements_[i] * elements_[j])] += u[i] * v[j];
      }
    }
    return out;
  }

 private:
  void check(const QVec& v) const {
    if (v.size() != order()) {
      throw ShapeError("group algebra element of wrong length");
    }
  }

  int points_;
  std::vector<Permutation> elements_;
};

/// One generator per non-commuting pair of transpositions {α, β}:
/// w(w − 3) for w = r_α + r_β + r_α r_β r_α.
inline std::vector<QVec> ideal_generators(const SymmetricGroupAlgebra& algebra) {
  const TranspositionSystem system = build_symmetric(algebra.points() >= 2
                                                         ? algebra.points()
                                                         : 2);
  std::vector<QVec> out;
  if (algebra.points() < 2) return out;
  for (int i = 0; i < system.size(); ++i) {
    for (int j = i + 1; j < system.size(); ++j) {
      if (!system.adjacent(i, j)) continue;
      const Permutation& alpha = system.involution(i);
      const Permutation& beta = system.involution(j);
      QVec w = algebra.zero();
      w[algebra.index_of(alpha)] += 1;
      w[algebra.index_of(beta)] += 1;
      w[algebra.index_of(beta.conjugated_by(alpha))] += 1;
      QVec u = algebra.convolve(w, w);
      axpy(u, -3, w);
      out.push_back(std::move(u));
    }
  }
  return out;
}

/// Smallest subspace containing `seeds` and stable under multiplication by
/// group elements on either side, computed by worklist saturation with the
/// adjacent transpositions (which generate the group, so stability under
/// them is stability under everything).
inline RowEchelon saturate_two_sided(const SymmetricGroupAlgebra& algebra,
                                     const std::vector<QVec>& seeds) {
  RowEchelon echelon(static_cast<int>(algebra.order()));
  std::vector<Permutation> gens;
  for (int i = 0; i + 1 < algebra.points(); ++i) {
    gens.push_back(Permutation::transposition(algebra.points(), i, i + 1));
  }
  std::vector<QVec> frontier;
  for (const auto& seed : seeds) {
    if (echelon.insert(QVec(seed))) frontier.push_back(seed);
  }
  for (std::size_t f = 0; f < frontier.size(); ++f) {
    for (const auto& g : gens) {
      for (QVec moved : {algebra.act_left(g, frontier[f]),
                         algebra.act_right(frontier[f], g)}) {
        if (echelon.insert(QVec(moved))) frontier.push_back(std::move(moved));
      }
    }
  }
  return echelon;
}

/// Explicit post-hoc stability check of a saturated row space: every basis
/// row stays inside under one-step translation by every adjacent
/// transposition.  Quadratic in the rank; intended for small orders.
inline bool verify_saturated(const SymmetricGroupAlgebra& algebra,
                             const RowEchelon& echelon) {
  for (int i = 0; i + 1 < algebra.points(); ++i) {
    const Permutation g =
        Permutation::transposition(algebra.points(), i, i + 1);
    for (const auto& row : echelon.rows()) {
      if (!echelon.contains(algebra.act_left(g, row)) ||
          !echelon.contains(algebra.act_right(row, g))) {
        return false;
      }
    }
  }
  return true;
}

/// Dimension summary of the quotient of the group algebra by the
/// two-sided ideal.
struct QuotientReport {
  int n = 0;
  std::size_t group_order = 0;
  int ideal_dim = 0;
  int quotient_dim = 0;
  /// Group elements whose cosets form a basis of the quotient (the
  /// non-pivot coordinates of the saturated row space).
  std::vector<Permutation> basis;
  /// Whether the explicit post-hoc stability pass ran (small orders only).
  bool saturation_verified = false;
};

inline QuotientReport quotient_dimension(
    int n, std::size_t dimension_budget = kDefaultZhuBudget) {
  if (n < 1) {
    throw InvalidSeries("quotient needs n ≥ 1, got " + std::to_string(n));
  }
  const SymmetricGroupAlgebra algebra(n + 1, dimension_budget);
  const std::vector<QVec> gens = ideal_generators(algebra);
  const RowEchelon echelon = saturate_two_sided(algebra, gens);

  QuotientReport report;
  report.n = n;
  report.group_order = algebra.order();
  report.ideal_dim = echelon.rank();
  report.quotient_dim = static_cast<int>(algebra.order()) - echelon.rank();
  std::vector<char> pivot(algebra.order(), 0);
  for (int c : echelon.pivots()) pivot[c] = 1;
  for (std::size_t c = 0; c < algebra.order(); ++c) {
    if (!pivot[c]) report.basis.push_back(algebra.element(c));
  }
  if (algebra.order() <= 120) {
    if (!verify_saturated(algebra, echelon)) {
      throw InternalInconsistency("saturated span is not two-sided stable");
    }
    report.saturation_verified = true;
  }
  for (const auto& gen : gens) {
    if (!echelon.contains(gen)) {
      throw InternalInconsistency("an ideal generator escaped its own span");
    }
  }
  return report;
}

/// Informational comparison: quotient dimension next to the sector-index
/// count from the minimal-series side.  No equality is asserted.
struct SectorCountReport {
  int n = 0;
  int quotient_dim = 0;
  std::vector<int> sectors;
};

inline SectorCountReport cross_check_sector_count(
    int n, std::size_t dimension_budget = kDefaultZhuBudget) {
  SectorCountReport report;
  report.n = n;
  report.quotient_dim = quotient_dimension(n, dimension_budget).quotient_dim;
  report.sectors = sector_labels(n);
  return report;
}

}  // namespace matsuo
