#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matsuo/errors.hpp"
#include "matsuo/permutation.hpp"

namespace matsuo {

/// Default cap on group-enumeration size (number of elements).
inline constexpr std::size_t kDefaultGroupBudget = 1'000'000;

/// Safety cap on conjugation-closure size; honest inputs never get close.
inline constexpr std::size_t kClosureCap = 1u << 20;

/// Smallest set of involutions containing the generators and closed under
/// conjugation by its own members.  Generators are padded to a common
/// degree; each must be an involution (order exactly 2).
inline std::vector<Permutation> close_under_conjugation(
    std::vector<Permutation> generators) {
  if (generators.empty()) {
    throw InvalidGenerator("no generators given");
  }
  int degree = 0;
  for (const auto& g : generators) degree = std::max(degree, g.degree());
  for (auto& g : generators) {
    g = g.padded(degree);
    if (g.order() != 2) {
      throw InvalidGenerator("generator " + g.cycle_string() +
                             " is not an involution");
    }
  }
  std::set<Permutation> seen(generators.begin(), generators.end());
  std::vector<Permutation> work(seen.begin(), seen.end());
  auto push = [&](Permutation p) {
    if (seen.insert(p).second) {
      if (seen.size() > kClosureCap) {
        throw BudgetExceeded("conjugation closure exceeded " +
                             std::to_string(kClosureCap) + " involutions");
      }
      work.push_back(std::move(p));
    }
  };
  // The outer bound is re-read every pass, so members discovered late are
  // still paired with every earlier member (both conjugation directions).
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      push(work[i].conjugated_by(work[j]));
      push(work[j].conjugated_by(work[i]));
    }
  }
  return {seen.begin(), seen.end()};
}

/// Outcome of checking that every product of two involutions in the set
/// has order at most 3.  `offending` holds the first failing index pair.
struct ThreeTranspositionVerdict {
  bool ok = false;
  std::optional<std::pair<int, int>> offending;
};

/// A conjugation-closed set of involutions in a symmetric group, with its
/// non-commuting ("diagram") graph and the table i,j ↦ t_i t_j t_i.
/// Involutions are stored sorted, so indices are canonical.
class TranspositionSystem {
 public:
  /// Requires a conjugation-closed list; use from_generators otherwise.
  explicit TranspositionSystem(std::vector<Permutation> closed_involutions) {
    involutions_ = std::move(closed_involutions);
    std::sort(involutions_.begin(), involutions_.end());
    involutions_.erase(
        std::unique(involutions_.begin(), involutions_.end()),
        involutions_.end());
    if (involutions_.empty()) {
      throw InvalidGenerator("no involutions given");
    }
    degree_ = involutions_.front().degree();
    for (const auto& t : involutions_) {
      if (t.degree() != degree_) {
        throw ShapeError("involutions of mixed degree");
      }
      if (t.order() != 2) {
        throw InvalidGenerator("element " + t.cycle_string() +
                               " is not an involution");
      }
    }
    const int n = size();
    circ_.assign(n, std::vector<int>(n, -1));
    adjacency_.assign(n, {});
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Permutation c = involutions_[j].conjugated_by(involutions_[i]);
        int idx = index_of(c);
        if (idx < 0) {
          throw InvalidGenerator(
              "involution list is not closed under conjugation: " +
              involutions_[i].cycle_string() + " maps " +
              involutions_[j].cycle_string() + " outside the list");
        }
        circ_[i][j] = idx;
        if (idx != j && i != j) adjacency_[i].push_back(j);
      }
    }
    verdict_.ok = true;
    for (int i = 0; i < n && verdict_.ok; ++i) {
      for (int j = i + 1; j < n; ++j) {
        long ord = (involutions_[i] * involutions_[j]).order();
        if (ord > 3) {
          verdict_.ok = false;
          verdict_.offending = {i, j};
          break;
        }
      }
    }
  }

  static TranspositionSystem from_generators(
      const std::vector<Permutation>& generators) {
    return TranspositionSystem(close_under_conjugation(generators));
  }

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(involutions_.size()); }
  const std::vector<Permutation>& involutions() const { return involutions_; }
  const Permutation& involution(int i) const { return involutions_[i]; }

  /// Index of p in the sorted involution list, or -1.
  int index_of(const Permutation& p) const {
    auto it = std::lower_bound(involutions_.begin(), involutions_.end(), p);
    if (it == involutions_.end() || !(*it == p)) return -1;
    return static_cast<int>(it - involutions_.begin());
  }

  /// True when t_i and t_j do not commute (an edge of the diagram graph).
  bool adjacent(int i, int j) const { return i != j && circ_[i][j] != j; }

  /// Index of t_i t_j t_i.  Equals j exactly when t_i and t_j commute.
  int circ(int i, int j) const { return circ_[i][j]; }

  /// Ascending neighbour list of vertex i in the diagram graph.
  const std::vector<int>& neighbours(int i) const { return adjacency_[i]; }

  const ThreeTranspositionVerdict& verdict() const { return verdict_; }

 private:
  int degree_ = 0;
  std::vector<Permutation> involutions_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> circ_;
  ThreeTranspositionVerdict verdict_;
};

/// All transpositions of the symmetric group on m points (m ≥ 2).
inline TranspositionSystem build_symmetric(int m) {
  if (m < 2) {
    throw InvalidSize("symmetric system needs at least 2 points, got " +
                      std::to_string(m));
  }
  std::vector<Permutation> transpositions;
  transpositions.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      transpositions.push_back(Permutation::transposition(m, a, b));
    }
  }
  return TranspositionSystem(std::move(transpositions));
}

/// Connected components of the diagram graph, each sorted ascending,
/// listed by smallest member.
inline std::vector<std::vector<int>> connected_components(
    const TranspositionSystem& system) {
  const int n = system.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> components;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> component;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (int w : system.neighbours(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

inline bool is_indecomposable(const TranspositionSystem& system) {
  return connected_components(system).size() == 1;
}

/// Per-component common diagram-graph degree, when one exists.
struct RegularityReport {
  /// Set when every vertex of the whole graph has the same degree.
  std::optional<int> k;
  /// One entry per component: its common degree, if the component is regular.
  std::vector<std::optional<int>> component_k;
};

inline RegularityReport regularity(const TranspositionSystem& system) {
  RegularityReport report;
  bool global_uniform = true;
  int global_k = -1;
  for (const auto& component : connected_components(system)) {
    int local_k = static_cast<int>(system.neighbours(component[0]).size());
    bool local_uniform = true;
    for (int v : component) {
      int d = static_cast<int>(system.neighbours(v).size());
      if (d != local_k) local_uniform = false;
      if (global_k < 0) global_k = d;
      if (d != global_k) global_uniform = false;
    }
    report.component_k.push_back(
        local_uniform ? std::optional<int>(local_k) : std::nullopt);
  }
  if (global_uniform && global_k >= 0) report.k = global_k;
  return report;
}

/// Breadth-first enumeration of the group generated by `generators`.
/// Returns the elements sorted; throws BudgetExceeded past `budget` elements.
inline std::vector<Permutation> enumerate_group(
    const std::vector<Permutation>& generators,
    std::size_t budget = kDefaultGroupBudget) {
  if (generators.empty()) {
    throw InvalidGenerator("no generators given");
  }
  int degree = 0;
  for (const auto& g : generators) degree = std::max(degree, g.degree());
  std::vector<Permutation> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(g.padded(degree));

  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> work(seen.begin(), seen.end());
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const auto& g : gens) {
      Permutation next = work[i] * g;
      if (seen.insert(next).second) {
        if (seen.size() > budget) {
          throw BudgetExceeded("group enumeration exceeded budget of " +
                               std::to_string(budget) + " elements");
        }
        work.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

/// True when no non-identity element of `elements` commutes with every
/// involution of the system; pass the full generated group for the real
/// centre-freeness test.
inline bool is_center_free(const TranspositionSystem& system,
                           const std::vector<Permutation>& elements) {
  for (const auto& g : elements) {
    if (g.is_identity()) continue;
    bool central = true;
    for (const auto& t : system.involutions()) {
      if (!(g * t == t * g)) {
        central = false;
        break;
      }
    }
    if (central) return false;
  }
  return true;
}

inline bool is_center_free(const TranspositionSystem& system,
                           std::size_t budget = kDefaultGroupBudget) {
  return is_center_free(system,
                        enumerate_group(system.involutions(), budget));
}

}  // namespace matsuo
