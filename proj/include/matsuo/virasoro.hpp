#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matsuo/errors.hpp"
#include "matsuo/rational.hpp"

namespace matsuo {

/// A highest-weight label (r, s) of the n-th unitary minimal series.
/// Labels (r, s) and (n+2−r, n+3−s) name the same module; the canonical
/// representative is the lexicographically smaller of the two.
struct MinimalLabel {
  int n = 1;
  int r = 1;
  int s = 1;

  friend bool operator==(const MinimalLabel& a, const MinimalLabel& b) {
    return a.n == b.n && a.r == b.r && a.s == b.s;
  }
  friend bool operator<(const MinimalLabel& a, const MinimalLabel& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.r != b.r) return a.r < b.r;
    return a.s < b.s;
  }
};

inline void require_series(int n) {
  if (n < 1) {
    throw InvalidSeries("series index must be at least 1, got " +
                        std::to_string(n));
  }
}

inline void require_label(const MinimalLabel& l) {
  require_series(l.n);
  if (l.r < 1 || l.r > l.n + 1 || l.s < 1 || l.s > l.n + 2) {
    throw InvalidLabel("label (" + std::to_string(l.r) + ", " +
                       std::to_string(l.s) + ") outside the rank-" +
                       std::to_string(l.n) + " rectangle");
  }
}

/// c_n = 1 − 6/((n+2)(n+3)).
inline Rational central_charge_c(int n) {
  require_series(n);
  Rational f(6, static_cast<long>(n + 2) * (n + 3));
  f.canonicalize();
  return 1 - f;
}

/// h_{r,s} = ((r(n+3) − s(n+2))² − 1) / (4(n+2)(n+3)).
inline Rational highest_weight(const MinimalLabel& l) {
  require_label(l);
  const long d = static_cast<long>(l.r) * (l.n + 3) -
                 static_cast<long>(l.s) * (l.n + 2);
  Rational h(d * d - 1, 4L * (l.n + 2) * (l.n + 3));
  h.canonicalize();
  return h;
}

inline Rational highest_weight(int n, int r, int s) {
  return highest_weight(MinimalLabel{n, r, s});
}

inline MinimalLabel conjugate_label(const MinimalLabel& l) {
  require_label(l);
  return MinimalLabel{l.n, l.n + 2 - l.r, l.n + 3 - l.s};
}

inline MinimalLabel canonical(const MinimalLabel& l) {
  const MinimalLabel other = conjugate_label(l);
  return other < l ? other : l;
}

/// All canonical labels of series n, in lexicographic order.
inline std::vector<MinimalLabel> canonical_labels(int n) {
  require_series(n);
  std::vector<MinimalLabel> out;
  for (int r = 1; r <= n + 1; ++r) {
    for (int s = 1; s <= n + 2; ++s) {
      const MinimalLabel l{n, r, s};
      if (canonical(l) == l) out.push_back(l);
    }
  }
  return out;
}

/// A fusion product: canonical labels with positive multiplicities.
struct FusionResult {
  int n = 1;
  std::map<std::pair<int, int>, int> terms;  // (r, s) → multiplicity

  bool contains(const MinimalLabel& l) const {
    const MinimalLabel c = canonical(l);
    return terms.find({c.r, c.s}) != terms.end();
  }

  std::vector<MinimalLabel> labels() const {
    std::vector<MinimalLabel> out;
    for (const auto& [rs, mult] : terms) {
      (void)mult;
      out.push_back(MinimalLabel{n, rs.first, rs.second});
    }
    return out;
  }

  friend bool operator==(const FusionResult& a, const FusionResult& b) {
    return a.n == b.n && a.terms == b.terms;
  }
};

namespace detail {
/// Truncated product on raw labels, before canonicalization.
inline std::map<std::pair<int, int>, int> fuse_raw(const MinimalLabel& a,
                                                   const MinimalLabel& b) {
  const int n = a.n;
  const int m = std::min(std::min(a.r, b.r),
                         std::min(n + 2 - a.r, n + 2 - b.r));
  const int nn = std::min(std::min(a.s, b.s),
                          std::min(n + 3 - a.s, n + 3 - b.s));
  std::map<std::pair<int, int>, int> out;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= nn; ++j) {
      const MinimalLabel raw{n, std::abs(a.r - b.r) + 2 * i - 1,
                             std::abs(a.s - b.s) + 2 * j - 1};
      require_label(raw);  // the truncation keeps outputs in range
      const MinimalLabel c = canonical(raw);
      ++out[{c.r, c.s}];
    }
  }
  return out;
}
}  // namespace detail

/// Fusion product of two modules of the same series.  Evaluated on the
/// raw labels, on the swapped pair and on the canonicalized pair; the
/// three canonicalized multisets must agree, otherwise the truncation
/// rule itself is inconsistent and InternalInconsistency is thrown.
inline FusionResult fuse(const MinimalLabel& a, const MinimalLabel& b) {
  require_label(a);
  require_label(b);
  if (a.n != b.n) {
    throw InvalidLabel("fusing labels of different series (" +
                       std::to_string(a.n) + " vs " + std::to_string(b.n) +
                       ")");
  }
  FusionResult result{a.n, detail::fuse_raw(a, b)};
  if (detail::fuse_raw(b, a) != result.terms ||
      detail::fuse_raw(canonical(a), canonical(b)) != result.terms) {
    throw InternalInconsistency("fusion product depends on representatives");
  }
  return result;
}

inline FusionResult fuse(int n, const MinimalLabel& a, const MinimalLabel& b) {
  if (a.n != n || b.n != n) {
    throw InvalidLabel("labels do not belong to series " + std::to_string(n));
  }
  return fuse(a, b);
}

/// Result of scanning all label pairs for weight coincidences.
struct WeightScanReport {
  int n = 1;
  bool ok = false;
  /// Set on failure: (r, s, r', s') with equal weights but unrelated labels,
  /// or related labels with different weights.
  std::optional<std::array<int, 4>> counterexample;
};

/// Exhaustively confirms that h_{r,s} = h_{r',s'} exactly when the labels
/// are equal or conjugate.
inline WeightScanReport weight_coincidence_scan(int n) {
  require_series(n);
  WeightScanReport report;
  report.n = n;
  report.ok = true;
  std::vector<MinimalLabel> all;
  for (int r = 1; r <= n + 1; ++r) {
    for (int s = 1; s <= n + 2; ++s) all.push_back(MinimalLabel{n, r, s});
  }
  for (const auto& a : all) {
    const Rational ha = highest_weight(a);
    for (const auto& b : all) {
      const bool same_class = canonical(a) == canonical(b);
      const bool same_weight = ha == highest_weight(b);
      if (same_class != same_weight) {
        report.ok = false;
        report.counterexample = {a.r, a.s, b.r, b.s};
        return report;
      }
    }
  }
  return report;
}

/// True when every pairwise fusion of members of S stays inside S
/// (everything compared in canonical form).
inline bool fusion_closed(int n, const std::vector<MinimalLabel>& labels) {
  require_series(n);
  std::vector<MinimalLabel> set;
  for (const auto& l : labels) {
    if (l.n != n) {
      throw InvalidLabel("label of series " + std::to_string(l.n) +
                         " in a series-" + std::to_string(n) + " set");
    }
    set.push_back(canonical(l));
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  for (const auto& a : set) {
    for (const auto& b : set) {
      for (const auto& out : fuse(a, b).labels()) {
        if (!std::binary_search(set.begin(), set.end(), out)) return false;
      }
    }
  }
  return true;
}

/// One summand in a branching decomposition: the sector index 2k together
/// with the attached weight h_{2k+1, 2j+1}.
struct BranchingSummand {
  int k = 0;
  Rational weight;

  friend bool operator==(const BranchingSummand& a, const BranchingSummand& b) {
    return a.k == b.k && a.weight == b.weight;
  }
};

/// Summands (k, h_{2k+1,2j+1}) for 0 ≤ 2k ≤ n, in increasing k.
inline std::vector<BranchingSummand> branching_labels(int n, int j) {
  require_series(n);
  if (j < 0 || 2 * j > n + 1) {
    throw InvalidLabel("branching index j must satisfy 0 ≤ 2j ≤ n+1");
  }
  std::vector<BranchingSummand> out;
  for (int k = 0; 2 * k <= n; ++k) {
    out.push_back({k, highest_weight(n, 2 * k + 1, 2 * j + 1)});
  }
  return out;
}

/// Sector indices 2j with 0 ≤ 2j ≤ i+1, in increasing order.
inline std::vector<int> sector_labels(int i) {
  if (i < 1) {
    throw InvalidSeries("sector index must be at least 1, got " +
                        std::to_string(i));
  }
  std::vector<int> out;
  for (int j = 0; 2 * j <= i + 1; ++j) out.push_back(2 * j);
  return out;
}

/// Distinct module weights of series n, plus — for the c = 1/2 series —
/// the split into σ-type weights and the excluded twisted weight.
struct SigmaTypeReport {
  int n = 1;
  std::vector<Rational> weights;     // distinct, ascending
  std::vector<Rational> sigma_type;  // populated for n = 1
  std::vector<Rational> excluded;    // populated for n = 1
};

inline SigmaTypeReport sigma_type_weights(int n) {
  require_series(n);
  SigmaTypeReport report;
  report.n = n;
  for (const auto& l : canonical_labels(n)) {
    report.weights.push_back(highest_weight(l));
  }
  std::sort(report.weights.begin(), report.weights.end());
  report.weights.erase(
      std::unique(report.weights.begin(), report.weights.end()),
      report.weights.end());
  if (n == 1) {
    const Rational twisted(1, 16);
    for (const auto& h : report.weights) {
      (h == twisted ? report.excluded : report.sigma_type).push_back(h);
    }
  }
  return report;
}

}  // namespace matsuo
