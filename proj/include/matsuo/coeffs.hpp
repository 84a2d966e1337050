#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matsuo/errors.hpp"
#include "matsuo/linalg.hpp"
#include "matsuo/rational.hpp"

namespace matsuo {

/// Lower-triangular Toeplitz matrix, stored as its defining sequence:
/// entry (i, j) = a_{i−j} for i ≥ j, zero above the diagonal.  Products
/// of such matrices are again of this shape, with convolved sequences.
class LowerToeplitz {
 public:
  explicit LowerToeplitz(std::vector<Rational> sequence)
      : sequence_(std::move(sequence)) {
    if (sequence_.empty()) {
      throw InvalidSize("Toeplitz sequence must be nonempty");
    }
  }

  static LowerToeplitz identity(int m) {
    if (m < 1) throw InvalidSize("Toeplitz size must be at least 1");
    std::vector<Rational> seq(m, 0);
    seq[0] = 1;
    return LowerToeplitz(std::move(seq));
  }

  int size() const { return static_cast<int>(sequence_.size()); }
  const std::vector<Rational>& sequence() const { return sequence_; }

  Rational entry(int i, int j) const {
    if (i < 0 || j < 0 || i >= size() || j >= size()) {
      throw ShapeError("Toeplitz entry out of range");
    }
    return i >= j ? sequence_[i - j] : Rational(0);
  }

  QMat dense() const {
    QMat m(size(), QVec(size(), 0));
    for (int i = 0; i < size(); ++i) {
      for (int j = 0; j <= i; ++j) m[i][j] = sequence_[i - j];
    }
    return m;
  }

  friend LowerToeplitz operator*(const LowerToeplitz& a,
                                 const LowerToeplitz& b) {
    if (a.size() != b.size()) {
      throw ShapeError("Toeplitz sizes differ");
    }
    std::vector<Rational> seq(a.size(), 0);
    for (int t = 0; t < a.size(); ++t) {
      for (int u = 0; u <= t; ++u) seq[t] += a.sequence_[u] * b.sequence_[t - u];
    }
    return LowerToeplitz(std::move(seq));
  }

  friend bool operator==(const LowerToeplitz& a, const LowerToeplitz& b) {
    return a.sequence_ == b.sequence_;
  }

 private:
  std::vector<Rational> sequence_;
};

inline Rational factorial(int t) {
  Integer f = 1;
  for (int i = 2; i <= t; ++i) f *= i;
  return Rational(f);
}

/// exp of the shift Jordan block: sequence a_t = 1/t!, or (−1)^t/t! for
/// the inverse matrix when `negated` is set.
inline LowerToeplitz jordan_exp(int m, bool negated = false) {
  if (m < 1) throw InvalidSize("Toeplitz size must be at least 1");
  std::vector<Rational> seq(m);
  for (int t = 0; t < m; ++t) {
    seq[t] = Rational(1) / factorial(t);
    if (negated && t % 2 == 1) seq[t] = -seq[t];
  }
  return LowerToeplitz(std::move(seq));
}

/// A word in formal graded generators, stored as the letter degrees:
/// degree 1 is the letter E, degree t ≥ 2 the letter Q_t.  A word never
/// mixes the two alphabets.  Ordered shortlex so term order (and hence
/// printing) is canonical.
struct Word {
  std::vector<int> letters;

  int degree() const {
    int d = 0;
    for (int l : letters) d += l;
    return d;
  }

  bool mixes_alphabets() const {
    bool has_e = false, has_q = false;
    for (int l : letters) (l == 1 ? has_e : has_q) = true;
    return has_e && has_q;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters == b.letters;
  }
  friend bool operator<(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size()) {
      return a.letters.size() < b.letters.size();
    }
    return a.letters < b.letters;
  }

  std::string str() const {
    if (letters.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) out += "*";
      out += letters[i] == 1 ? "E" : "Q" + std::to_string(letters[i]);
    }
    return out;
  }
};

/// Rational linear combination of words; the free (noncommutative)
/// polynomial ring over one of the two alphabets.
class WordPolynomial {
 public:
  WordPolynomial() = default;

  static WordPolynomial zero() { return WordPolynomial(); }

  static WordPolynomial scalar(Rational c) {
    WordPolynomial p;
    if (c != 0) p.terms_[Word{}] = std::move(c);
    return p;
  }

  static WordPolynomial one() { return scalar(1); }

  /// The letter of degree `d`: E when d = 1, Q_d when d ≥ 2.
  static WordPolynomial generator(int d) {
    if (d < 1) throw InvalidSize("generator degree must be at least 1");
    WordPolynomial p;
    p.terms_[Word{{d}}] = 1;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Rational>& terms() const { return terms_; }

  /// Degree when homogeneous (all words of one degree); nullopt otherwise.
  /// The zero polynomial counts as homogeneous of every degree.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> degree;
    for (const auto& [word, coeff] : terms_) {
      (void)coeff;
      if (!degree) {
        degree = word.degree();
      } else if (*degree != word.degree()) {
        return std::nullopt;
      }
    }
    return terms_.empty() ? std::optional<int>(0) : degree;
  }

  /// The degree-d part.
  WordPolynomial component(int d) const {
    WordPolynomial out;
    for (const auto& [word, coeff] : terms_) {
      if (word.degree() == d) out.terms_[word] = coeff;
    }
    return out;
  }

  WordPolynomial& operator+=(const WordPolynomial& other) {
    for (const auto& [word, coeff] : other.terms_) add_term(word, coeff);
    return *this;
  }

  WordPolynomial& operator-=(const WordPolynomial& other) {
    for (const auto& [word, coeff] : other.terms_) add_term(word, -coeff);
    return *this;
  }

  WordPolynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [word, coeff] : terms_) coeff *= c;
    }
    return *this;
  }

  friend WordPolynomial operator+(WordPolynomial a, const WordPolynomial& b) {
    a += b;
    return a;
  }
  friend WordPolynomial operator-(WordPolynomial a, const WordPolynomial& b) {
    a -= b;
    return a;
  }
  friend WordPolynomial operator-(const WordPolynomial& a) {
    WordPolynomial out;
    for (const auto& [word, coeff] : a.terms_) out.terms_[word] = -coeff;
    return out;
  }
  friend WordPolynomial operator*(WordPolynomial a, const Rational& c) {
    a *= c;
    return a;
  }
  friend WordPolynomial operator*(const Rational& c, WordPolynomial a) {
    a *= c;
    return a;
  }

  /// Word concatenation extended bilinearly; left factor first.
  friend WordPolynomial operator*(const WordPolynomial& a,
                                  const WordPolynomial& b) {
    WordPolynomial out;
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) {
        Word w;
        w.letters = wa.letters;
        w.letters.insert(w.letters.end(), wb.letters.begin(),
                         wb.letters.end());
        if (w.mixes_alphabets()) {
          throw ShapeError("product would mix the E and Q alphabets");
        }
        out.add_term(w, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const WordPolynomial& a, const WordPolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const WordPolynomial& a, const WordPolynomial& b) {
    return !(a == b);
  }

  /// Human-readable form in canonical term order, e.g. "-Q4 + Q2*Q2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [word, coeff] : terms_) {
      Rational c = coeff;
      if (first) {
        if (c < 0) {
          out += "-";
          c = -c;
        }
      } else {
        out += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
      }
      first = false;
      const bool unit_coeff = (c == 1) && !word.letters.empty();
      if (!unit_coeff) out += to_string(c);
      if (!word.letters.empty()) {
        if (!unit_coeff) out += "*";
        out += word.str();
      }
    }
    return out;
  }

 private:
  void add_term(const Word& word, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(word, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Word, Rational> terms_;
};

/// The vanishing conventions for the two coefficient families at weight N.
struct BoundaryTable {
  int N;

  explicit BoundaryTable(int weight) : N(weight) {
    if (N < 1) throw InvalidSize("weight must be at least 1");
  }

  /// First family: zero when k ≥ N or k + j ≥ N.
  bool half_vanishes(int k, int j) const {
    return k < 0 || j < 0 || k >= N || k + j >= N;
  }

  /// Second family: zero when k ≥ N or k + j > N + 1.
  bool zero_vanishes(int k, int j) const {
    return k < 0 || k >= N || k + j > N + 1;
  }
};

/// ((−1)^j / j!) E^j for 0 ≤ j ≤ i, zero outside that triangle.  The
/// coefficients reproduce the rows of jordan_exp(·, negated).
inline WordPolynomial p_half(int i, int j) {
  if (j < 0 || i < 0 || j > i) return WordPolynomial::zero();
  WordPolynomial e_power = WordPolynomial::one();
  for (int t = 0; t < j; ++t) e_power = e_power * WordPolynomial::generator(1);
  Rational c = Rational(1) / factorial(j);
  if (j % 2 == 1) c = -c;
  return c * e_power;
}

namespace detail {
/// The recursion −Q_j − Σ_{t=2}^{j−1} Q_t · P(k+t, j−t), with recursive
/// values already subject to the boundary table; no boundary applied to
/// (k, j) itself.
inline WordPolynomial p_zero_recursion(int N, int k, int j);
}  // namespace detail

/// Coefficient P(k, j) over the Q-alphabet at weight N: the boundary
/// table short-circuits to zero, otherwise the left-multiplication
/// recursion applies.  Out-of-range indices yield zero, never an error.
inline WordPolynomial p_zero(int N, int k, int j) {
  const BoundaryTable boundary(N);
  if (j < 1 || boundary.zero_vanishes(k, j)) return WordPolynomial::zero();
  return detail::p_zero_recursion(N, k, j);
}

namespace detail {
inline WordPolynomial p_zero_recursion(int N, int k, int j) {
  WordPolynomial out;
  if (j >= 2) out -= WordPolynomial::generator(j);
  for (int t = 2; t <= j - 1; ++t) {
    const WordPolynomial inner = p_zero(N, k + t, j - t);
    if (!inner.is_zero()) {
      out -= WordPolynomial::generator(t) * inner;
    }
  }
  return out;
}
}  // namespace detail

/// Outcome of the symbolic substitution check at weight N.
struct SubstitutionReport {
  int N = 0;
  bool ok = false;
  /// First failing (i, degree) pair, if any.
  std::optional<std::pair<int, int>> first_failure;
  /// Indices (k, j) where the boundary table forces zero although the raw
  /// recursion evaluates to something nonzero; reported, not resolved.
  std::vector<std::pair<int, int>> boundary_overrides;
};

/// Models the two graded families of symbols V_k and B_k in the free
/// module over the Q-word algebra — V_{N−1} and all V_k with k > N
/// vanish, V_N spans the bottom line and stays — defines
/// B_k = V_{k−1} + Σ_{m≥0} Q_{m+2} V_{k+m+1}, and checks the inversion
///   V_{k−1} = B_k + Σ_{j>0} P(k, j) B_{k+j}
/// coefficient-by-coefficient and degree-by-degree for k = N, ..., 1.
inline SubstitutionReport verify_substitution(int N) {
  if (N < 2) throw InvalidSize("substitution check needs N ≥ 2");
  using ModuleElem = std::map<int, WordPolynomial>;
  auto normalize = [](ModuleElem& m) {
    for (auto it = m.begin(); it != m.end();) {
      it = it->second.is_zero() ? m.erase(it) : std::next(it);
    }
  };
  auto v_symbol = [N](int k) -> ModuleElem {
    if (k < 0 || k == N - 1 || k > N) return {};
    return {{k, WordPolynomial::one()}};
  };
  auto b_symbol = [&](int k) -> ModuleElem {
    ModuleElem out = v_symbol(k - 1);
    for (int m = 0; k + m + 1 <= N; ++m) {
      for (auto& [index, coeff] : v_symbol(k + m + 1)) {
        out[index] += WordPolynomial::generator(m + 2) * coeff;
      }
    }
    normalize(out);
    return out;
  };

  SubstitutionReport report;
  report.N = N;
  report.ok = true;
  for (int i = 0; i < N && report.ok; ++i) {
    const int k = N - i;
    ModuleElem difference = v_symbol(k - 1);
    auto subtract = [&](const WordPolynomial& scale, const ModuleElem& elem) {
      for (const auto& [index, coeff] : elem) {
        difference[index] -= scale * coeff;
      }
    };
    subtract(WordPolynomial::one(), b_symbol(k));
    for (int j = 1; k + j <= N + 1; ++j) {
      const WordPolynomial p = p_zero(N, k, j);
      if (!p.is_zero()) subtract(p, b_symbol(k + j));
    }
    normalize(difference);
    if (!difference.empty()) {
      report.ok = false;
      int bad_degree = -1;
      for (const auto& [index, coeff] : difference) {
        (void)index;
        for (const auto& [word, c] : coeff.terms()) {
          (void)c;
          if (bad_degree < 0 || word.degree() < bad_degree) {
            bad_degree = word.degree();
          }
        }
      }
      report.first_failure = {i, bad_degree};
    }
  }

  const BoundaryTable boundary(N);
  for (int k = 1; k <= N; ++k) {
    for (int j = 1; j <= N; ++j) {
      if (!boundary.zero_vanishes(k, j)) continue;
      if (!detail::p_zero_recursion(N, k, j).is_zero()) {
        report.boundary_overrides.emplace_back(k, j);
      }
    }
  }
  return report;
}

}  // namespace matsuo
