#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matsuo/errors.hpp"
#include "matsuo/permutation.hpp"
#include "matsuo/transposition_system.hpp"

namespace matsuo {

/// The type-A root system of rank n, realised inside Z^{n+1}: positive
/// roots are e_a - e_b for a < b, and the i-th simple root is
/// e_i - e_{i+1}.  Simple roots come first in `positive_roots`; the
/// remaining roots follow by increasing span b - a, then by a.
struct RootSystemA {
  int rank = 0;
  std::vector<std::vector<int>> positive_roots;

  static RootSystemA create(int n) {
    if (n < 1 || n > 1000) {
      throw InvalidRank("rank must be between 1 and 1000, got " +
                        std::to_string(n));
    }
    RootSystemA r;
    r.rank = n;
    auto root = [n](int a, int b) {
      std::vector<int> v(n + 1, 0);
      v[a] = 1;
      v[b] = -1;
      return v;
    };
    for (int a = 0; a + 1 <= n; ++a) r.positive_roots.push_back(root(a, a + 1));
    for (int span = 2; span <= n; ++span) {
      for (int a = 0; a + span <= n; ++a) {
        r.positive_roots.push_back(root(a, a + span));
      }
    }
    return r;
  }

  int count() const { return static_cast<int>(positive_roots.size()); }

  /// Euclidean pairing of positive roots i and j: 2, ±1 or 0 in type A.
  int pairing(int i, int j) const {
    const auto& u = positive_roots[i];
    const auto& v = positive_roots[j];
    int dot = 0;
    for (std::size_t p = 0; p < u.size(); ++p) dot += u[p] * v[p];
    return dot;
  }

  /// Support endpoints (a, b) of positive root i = e_a - e_b.
  std::pair<int, int> endpoints(int i) const {
    const auto& v = positive_roots[i];
    int a = -1, b = -1;
    for (int p = 0; p < static_cast<int>(v.size()); ++p) {
      if (v[p] == 1) a = p;
      if (v[p] == -1) b = p;
    }
    return {a, b};
  }

  /// The reflection in positive root i, acting on the points {0, ..., n}.
  Permutation reflection(int i) const {
    auto [a, b] = endpoints(i);
    return Permutation::transposition(rank + 1, a, b);
  }
};

/// A type-A Weyl group presented as a transposition system, together with
/// the bijection between positive roots and involutions.
struct WeylRealization {
  RootSystemA roots;
  TranspositionSystem system;
  /// positive-root index → involution index in `system`.
  std::vector<int> root_to_involution;
};

/// Realises the rank-n type-A Weyl group (the symmetric group on n+1
/// points) as the system of all its transpositions, and cross-checks the
/// root/reflection dictionary: roots and involutions correspond one to
/// one, and two reflections fail to commute exactly when their roots are
/// non-orthogonal.
inline WeylRealization build_weyl_A(int n) {
  WeylRealization w{RootSystemA::create(n), build_symmetric(n + 1), {}};
  const int count = w.roots.count();
  if (count != w.system.size()) {
    throw InternalInconsistency("root count does not match involution count");
  }
  std::vector<char> hit(count, 0);
  for (int i = 0; i < count; ++i) {
    int idx = w.system.index_of(w.roots.reflection(i));
    if (idx < 0 || hit[idx]) {
      throw InternalInconsistency(
          "root reflections do not biject onto involutions");
    }
    hit[idx] = 1;
    w.root_to_involution.push_back(idx);
  }
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      bool adjacent = w.system.adjacent(w.root_to_involution[i],
                                        w.root_to_involution[j]);
      bool oblique = (i != j) && w.roots.pairing(i, j) != 0;
      if (adjacent != oblique) {
        throw InternalInconsistency(
            "diagram adjacency disagrees with root pairing");
      }
    }
  }
  return w;
}

}  // namespace matsuo
