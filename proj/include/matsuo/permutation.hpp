#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "matsuo/errors.hpp"

namespace matsuo {

/// A permutation of the points {0, ..., degree-1}, stored as its image
/// sequence: images()[p] is where p is sent.  Value type; totally ordered
/// lexicographically on the image sequence so containers of permutations
/// have a canonical order.
class Permutation {
 public:
  /// Identity on {0, ..., degree-1}.
  explicit Permutation(int degree = 0) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
  }

  /// Builds from an image sequence; rejects non-bijections.
  static Permutation from_images(std::vector<int> images) {
    const int m = static_cast<int>(images.size());
    std::vector<char> seen(m, 0);
    for (int v : images) {
      if (v < 0 || v >= m || seen[v]) {
        throw ParseError("image sequence is not a permutation");
      }
      seen[v] = 1;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// The transposition (a b) on {0, ..., degree-1}.
  static Permutation transposition(int degree, int a, int b) {
    if (a < 0 || b < 0 || a >= degree || b >= degree || a == b) {
      throw InvalidSize("transposition points out of range or equal");
    }
    Permutation p(degree);
    std::swap(p.images_[a], p.images_[b]);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int p = 0; p < degree(); ++p) {
      if (images_[p] != p) return false;
    }
    return true;
  }

  /// Same mapping extended by fixed points to a larger degree.
  Permutation padded(int degree) const {
    if (degree < this->degree()) {
      throw ShapeError("cannot pad a permutation to a smaller degree");
    }
    Permutation p(degree);
    std::copy(images_.begin(), images_.end(), p.images_.begin());
    return p;
  }

  Permutation inverse() const {
    Permutation p(degree());
    for (int q = 0; q < degree(); ++q) p.images_[images_[q]] = q;
    return p;
  }

  /// Multiplicative order (lcm of cycle lengths).
  long order() const {
    long result = 1;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 0; start < degree(); ++start) {
      if (seen[start]) continue;
      long len = 0;
      for (int p = start; !seen[p]; p = images_[p]) {
        seen[p] = 1;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  /// Composition: (a * b)(p) = a(b(p)).  Degrees must match.
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) {
      throw ShapeError("composing permutations of different degrees");
    }
    Permutation c(a.degree());
    for (int p = 0; p < a.degree(); ++p) c.images_[p] = a.images_[b.images_[p]];
    return c;
  }

  /// t * this * t^{-1}.
  Permutation conjugated_by(const Permutation& t) const {
    if (t.degree() != degree()) {
      throw ShapeError("conjugating by a permutation of different degree");
    }
    Permutation c(degree());
    for (int p = 0; p < degree(); ++p) {
      c.images_[t.images_[p]] = t.images_[images_[p]];
    }
    return c;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

  /// Disjoint-cycle rendering, fixed points omitted; identity prints "()".
  /// Cycles are listed by smallest moved point and start at that point,
  /// so the rendering is canonical.
  std::string cycle_string() const {
    std::string out;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 0; start < degree(); ++start) {
      if (seen[start] || images_[start] == start) continue;
      out.push_back('(');
      bool first = true;
      for (int p = start; !seen[p]; p = images_[p]) {
        seen[p] = 1;
        if (!first) out.push_back(' ');
        out += std::to_string(p);
        first = false;
      }
      out.push_back(')');
    }
    if (out.empty()) out = "()";
    return out;
  }

 private:
  std::vector<int> images_;
};

/// Parses cycle notation like "(0 1)(2 3)" or "(0 2 1)".  Commas are
/// accepted as separators.  Cycles compose left to right as functions:
/// the rightmost cycle acts first, matching operator*.  The result acts on
/// {0, ..., d-1} where d-1 is the largest point mentioned (at least
/// min_degree points).  "()" is the identity.
inline Permutation parse_cycles(const std::string& text, int min_degree = 0) {
  std::vector<std::vector<int>> cycles;
  int max_point = -1;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() &&
           (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) {
      ++i;
    }
  };
  skip_space();
  if (i == text.size()) throw ParseError("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') {
      throw ParseError("expected '(' in cycle notation, got '" +
                       std::string(1, text[i]) + "'");
    }
    ++i;
    std::vector<int> cycle;
    skip_space();
    while (i < text.size() && text[i] != ')') {
      if (text[i] < '0' || text[i] > '9') {
        throw ParseError("expected a point in cycle notation, got '" +
                         std::string(1, text[i]) + "'");
      }
      int value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000) throw ParseError("point out of range");
        ++i;
      }
      if (std::find(cycle.begin(), cycle.end(), value) != cycle.end()) {
        throw ParseError("point " + std::to_string(value) +
                         " repeated within a cycle");
      }
      cycle.push_back(value);
      max_point = std::max(max_point, value);
      skip_space();
    }
    if (i == text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    if (cycle.size() == 1) {
      throw ParseError("singleton cycle (" + std::to_string(cycle[0]) + ")");
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  const int degree = std::max(min_degree, max_point + 1);
  Permutation result(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (std::size_t k = 0; k < it->size(); ++k) {
      img[(*it)[k]] = (*it)[(k + 1) % it->size()];
    }
    result = Permutation::from_images(std::move(img)) * result;
  }
  return result;
}

}  // namespace matsuo
