#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "matsuo/errors.hpp"
#include "matsuo/rational.hpp"

namespace matsuo {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

inline bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& x) { return x == 0; });
}

/// y += a * x.
inline QVec& axpy(QVec& y, const Rational& a, const QVec& x) {
  if (y.size() != x.size()) throw ShapeError("axpy: size mismatch");
  if (a != 0) {
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (x[i] != 0) y[i] += a * x[i];
    }
  }
  return y;
}

inline QMat identity_matrix(int n) {
  QMat m(n, QVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline QVec matvec(const QMat& m, const QVec& v) {
  if (!m.empty() && m.front().size() != v.size()) {
    throw ShapeError("matrix/vector size mismatch");
  }
  QVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
    }
  }
  return out;
}

inline QMat matmul(const QMat& a, const QMat& b) {
  if (a.empty() || b.empty()) return {};
  if (a.front().size() != b.size()) {
    throw ShapeError("matrix product size mismatch");
  }
  QMat c(a.size(), QVec(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b.front().size(); ++j) {
        if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

/// In-place reduced row echelon form; returns the pivot columns in order.
/// Deterministic: always picks the first nonzero entry as pivot.
inline std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m.front().size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot_row = -1;
    for (int r = row; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    std::swap(m[row], m[pivot_row]);
    const Rational inv = m[row][col];
    for (int c = col; c < cols; ++c) m[row][c] /= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(QMat m) { return static_cast<int>(rref(m).size()); }

/// Basis of {x : m x = 0}, one vector per free column, ordered by free
/// column.  Each vector has 1 in its free column.
inline std::vector<QVec> nullspace_basis(QMat m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m.front().size());
  const std::vector<int> pivots = rref(m);
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<QVec> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVec v(cols, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -m[r][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of A x = b (free variables set to zero), or nullopt.
inline std::optional<QVec> solve(const QMat& a, const QVec& b) {
  if (a.size() != b.size()) throw ShapeError("solve: size mismatch");
  if (a.empty()) return QVec{};
  const int cols = static_cast<int>(a.front().size());
  QMat aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  QVec x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x[pivots[r]] = aug[r][cols];
  }
  return x;
}

/// Signature of a symmetric bilinear form: counts of positive, negative
/// and zero entries in any congruent diagonalization.
struct Signature {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.positives == b.positives && a.negatives == b.negatives &&
           a.zeros == b.zeros;
  }
};

/// Diagonalizes a symmetric matrix by simultaneous row/column operations
/// (a congruence), entirely in exact arithmetic, and reads the signature
/// off the diagonal.  When a diagonal pivot is missing but the row is not
/// yet zero, adding a suitable row+column first creates one.
inline Signature congruence_signature(QMat a) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n) {
      throw ShapeError("signature of a non-square matrix");
    }
    for (int j = i + 1; j < n; ++j) {
      if (a[i][j] != a[j][i]) {
        throw ShapeError("signature of a non-symmetric matrix");
      }
    }
  }
  auto swap_rc = [&](int p, int q) {
    std::swap(a[p], a[q]);
    for (int r = 0; r < n; ++r) std::swap(a[r][p], a[r][q]);
  };
  auto add_rc = [&](int p, int q, const Rational& f) {
    // row p += f * row q, then the same on columns.
    for (int c = 0; c < n; ++c) a[p][c] += f * a[q][c];
    for (int r = 0; r < n; ++r) a[r][p] += f * a[r][q];
  };
  for (int p = 0; p < n; ++p) {
    if (a[p][p] == 0) {
      for (int q = p + 1; q < n; ++q) {
        if (a[q][q] != 0) {
          swap_rc(p, q);
          break;
        }
      }
    }
    if (a[p][p] == 0) {
      for (int q = p + 1; q < n; ++q) {
        if (a[p][q] != 0) {
          add_rc(p, q, 1);  // makes a[p][p] = 2 a[p][q] ≠ 0
          break;
        }
      }
    }
    if (a[p][p] == 0) continue;  // row p is zero beyond position p
    for (int q = p + 1; q < n; ++q) {
      if (a[q][p] != 0) add_rc(q, p, -a[q][p] / a[p][p]);
    }
  }
  Signature s;
  for (int p = 0; p < n; ++p) {
    const int sign = sgn(a[p][p]);
    if (sign > 0) {
      ++s.positives;
    } else if (sign < 0) {
      ++s.negatives;
    } else {
      ++s.zeros;
    }
  }
  return s;
}

/// Incrementally maintained reduced row echelon basis of a row space.
/// Supports rank queries, membership tests and reduction against the
/// current basis — the workhorse for ideal saturation and span checks.
class RowEchelon {
 public:
  explicit RowEchelon(int columns) : columns_(columns) {}

  int columns() const { return columns_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<QVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// v minus its projection onto the current row space.
  QVec reduce(QVec v) const {
    check(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = v[pivots_[r]];
      if (c == 0) continue;
      const Rational f = c;
      for (int j = pivots_[r]; j < columns_; ++j) {
        if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
      }
    }
    return v;
  }

  bool contains(const QVec& v) const {
    QVec r = reduce(v);
    return std::all_of(r.begin(), r.end(),
                       [](const Rational& x) { return x == 0; });
  }

  /// Adds v to the span; returns true when the rank grew.
  bool insert(QVec v) {
    v = reduce(std::move(v));
    int pivot = -1;
    for (int j = 0; j < columns_; ++j) {
      if (v[j] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) return false;
    const Rational inv = v[pivot];
    for (int j = pivot; j < columns_; ++j) v[j] /= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = rows_[r][pivot];
      if (c == 0) continue;
      const Rational f = c;
      for (int j = pivot; j < columns_; ++j) {
        if (v[j] != 0) rows_[r][j] -= f * v[j];
      }
    }
    auto where = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    const std::size_t pos = where - pivots_.begin();
    pivots_.insert(where, pivot);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

 private:
  void check(const QVec& v) const {
    if (static_cast<int>(v.size()) != columns_) {
      throw ShapeError("row of wrong length");
    }
  }

  int columns_;
  std::vector<QVec> rows_;
  std::vector<int> pivots_;
};

}  // namespace matsuo
