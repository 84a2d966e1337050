#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matsuo/errors.hpp"
#include "matsuo/linalg.hpp"
#include "matsuo/rational.hpp"
#include "matsuo/rng.hpp"
#include "matsuo/transposition_system.hpp"

namespace matsuo {

/// Coefficient vector over the involution basis of an algebra.
using AlgebraElement = QVec;

/// Eigenspace bases of the left-multiplication operator of one axis.
struct AdjointEigenspaces {
  std::vector<AlgebraElement> at_two;    // eigenvalue 2
  std::vector<AlgebraElement> at_zero;   // eigenvalue 0
  std::vector<AlgebraElement> at_alpha;  // eigenvalue α
};

/// Rank/radical/signature summary of the bilinear form.
struct FormReport {
  int dim = 0;
  int rank = 0;
  int nullity = 0;
  Signature signature;
  std::vector<AlgebraElement> radical_basis;
};

/// A finite-dimensional commutative algebra with a bilinear form, given by
/// explicit structure constants: the shape nondegenerate_quotient consumes
/// and produces, so quotients can be iterated.
struct AlgebraTables {
  int dim = 0;
  /// Which basis vectors of the *original* algebra the current basis
  /// vectors descend from (identity labels for a fresh algebra).
  std::vector<int> basis_labels;
  /// product[i][j] = coefficients of (basis i) · (basis j).
  std::vector<std::vector<AlgebraElement>> product;
  QMat gram;
};

/// The commutative algebra attached to a 3-transposition system: one basis
/// vector x^t per involution t, products and the bilinear form decided by
/// whether two involutions are equal, non-commuting, or commuting, with
/// structure parameters (α, β).  Both structures are invariant under the
/// group, and the form associates with the product; the constructor
/// validates associativity-invariance (exhaustively up to dimension 64,
/// on seeded samples beyond that).
class MatsuoAlgebra {
 public:
  static constexpr int kExhaustiveLimit = 64;
  static constexpr int kSampleCount = 2048;

  MatsuoAlgebra(TranspositionSystem system, Rational alpha, Rational beta,
                std::uint64_t validation_seed = 0)
      : system_(std::move(system)),
        alpha_(std::move(alpha)),
        beta_(std::move(beta)),
        validation_seed_(validation_seed) {
    if (alpha_ == 0 || beta_ == 0) {
      throw InvalidParameter("structure parameters must be nonzero");
    }
    if (!system_.verdict().ok) {
      throw InvalidParameter(
          "underlying system is not a 3-transposition system");
    }
    validate_invariance();
  }

  int dim() const { return system_.size(); }
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const TranspositionSystem& system() const { return system_; }
  bool validation_exhaustive() const { return validation_exhaustive_; }
  std::uint64_t validation_seed() const { return validation_seed_; }

  AlgebraElement zero() const { return AlgebraElement(dim(), 0); }

  AlgebraElement basis_element(int i) const {
    AlgebraElement e = zero();
    e.at(i) = 1;
    return e;
  }

  /// x^i · x^j as a coefficient vector.
  AlgebraElement basis_product(int i, int j) const {
    AlgebraElement out = zero();
    accumulate_basis_product(out, i, j, 1);
    return out;
  }

  /// (x^i | x^j).
  Rational basis_form(int i, int j) const {
    if (i == j) return beta_ / 2;
    if (system_.adjacent(i, j)) return alpha_ * beta_ / 8;
    return 0;
  }

  AlgebraElement multiply(const AlgebraElement& u,
                          const AlgebraElement& v) const {
    check_element(u);
    check_element(v);
    AlgebraElement out = zero();
    for (int i = 0; i < dim(); ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < dim(); ++j) {
        if (v[j] == 0) continue;
        accumulate_basis_product(out, i, j, u[i] * v[j]);
      }
    }
    return out;
  }

  Rational form(const AlgebraElement& u, const AlgebraElement& v) const {
    check_element(u);
    check_element(v);
    Rational out = 0;
    const Rational diag = beta_ / 2;
    const Rational off = alpha_ * beta_ / 8;
    for (int i = 0; i < dim(); ++i) {
      if (u[i] == 0) continue;
      out += u[i] * v[i] * diag;
      for (int j : system_.neighbours(i)) {
        if (v[j] != 0) out += u[i] * v[j] * off;
      }
    }
    return out;
  }

  /// The basis permutation induced by conjugation with involution i.
  AlgebraElement rho(int i, const AlgebraElement& v) const {
    check_element(v);
    AlgebraElement out = zero();
    for (int j = 0; j < dim(); ++j) {
      if (v[j] != 0) out[system_.circ(i, j)] = v[j];
    }
    return out;
  }

  QMat gram() const {
    QMat g(dim(), QVec(dim(), 0));
    for (int i = 0; i < dim(); ++i) {
      for (int j = 0; j < dim(); ++j) g[i][j] = basis_form(i, j);
    }
    return g;
  }

  /// Matrix of v ↦ x^i · v over the involution basis.
  QMat adjoint_matrix(int i) const {
    QMat m(dim(), QVec(dim(), 0));
    for (int j = 0; j < dim(); ++j) {
      AlgebraElement col = basis_product(i, j);
      for (int r = 0; r < dim(); ++r) m[r][j] = std::move(col[r]);
    }
    return m;
  }

  /// Kernel bases of ad_{x^i} − λ for λ ∈ {2, 0, α}, with built-in
  /// cross-checks: the three dimensions fill the space, eigenvalue 2 is
  /// carried by the axis alone, and ρ_i fixes the 0-eigenspace pointwise
  /// while negating the α-eigenspace.
  AdjointEigenspaces adjoint_eigenspaces(int i) const {
    if (alpha_ == 2) {
      throw DegenerateParameter(
          "eigenvalue α coincides with the axis eigenvalue 2");
    }
    const QMat m = adjoint_matrix(i);
    auto kernel_at = [&](const Rational& lambda) {
      QMat shifted = m;
      for (int d = 0; d < dim(); ++d) shifted[d][d] -= lambda;
      return nullspace_basis(std::move(shifted));
    };
    AdjointEigenspaces e;
    e.at_two = kernel_at(2);
    e.at_zero = kernel_at(0);
    e.at_alpha = kernel_at(alpha_);
    if (static_cast<int>(e.at_two.size() + e.at_zero.size() +
                         e.at_alpha.size()) != dim()) {
      throw InternalInconsistency("adjoint eigenspaces do not fill the space");
    }
    if (e.at_two.size() != 1 || !is_axis_multiple(e.at_two.front(), i)) {
      throw InternalInconsistency(
          "eigenvalue-2 space is not spanned by the axis");
    }
    for (const auto& v : e.at_zero) {
      if (rho(i, v) != v) {
        throw InternalInconsistency("ρ does not fix the 0-eigenspace");
      }
    }
    for (const auto& v : e.at_alpha) {
      AlgebraElement negated = v;
      for (auto& c : negated) c = -c;
      if (rho(i, v) != negated) {
        throw InternalInconsistency("ρ does not negate the α-eigenspace");
      }
    }
    return e;
  }

  /// 4 / (kα + 4), the coefficient putting the all-ones vector on weight 2.
  Rational conformal_coefficient() const {
    const Rational denom = regular_k() * alpha_ + 4;
    if (denom == 0) {
      throw SingularParameter("kα + 4 vanishes for these parameters");
    }
    return Rational(4) / denom;
  }

  /// The unique multiple ω of Σ_t x^t acting as multiplication-by-2 on
  /// every axis; requires an indecomposable system.
  AlgebraElement conformal_vector() const {
    const Rational c = conformal_coefficient();
    AlgebraElement omega(dim(), c);
    for (int j = 0; j < dim(); ++j) {
      AlgebraElement twice = basis_element(j);
      for (auto& x : twice) x *= 2;
      if (multiply(omega, basis_element(j)) != twice) {
        throw InternalInconsistency("conformal vector fails ω·x = 2x");
      }
    }
    return omega;
  }

  /// Twice the self-pairing of the conformal vector, cross-checked against
  /// the closed form 4β·dim / (kα + 4).
  Rational central_charge() const {
    const AlgebraElement omega = conformal_vector();
    const Rational cc = 2 * form(omega, omega);
    const Rational closed =
        Rational(4) * beta_ * dim() / (regular_k() * alpha_ + 4);
    if (cc != closed) {
      throw InternalInconsistency("central charge disagrees with closed form");
    }
    return cc;
  }

  /// Rank, radical and signature of the form.  Also verifies that the
  /// radical is an ideal (every product of a basis vector with a radical
  /// vector stays in the radical).
  FormReport form_report() const {
    FormReport report;
    report.dim = dim();
    const QMat g = gram();
    {
      QMat copy = g;
      report.rank = static_cast<int>(rref(copy).size());
    }
    report.radical_basis = nullspace_basis(g);
    report.nullity = static_cast<int>(report.radical_basis.size());
    report.signature = congruence_signature(g);
    if (report.rank + report.nullity != report.dim ||
        report.signature.positives + report.signature.negatives !=
            report.rank ||
        report.signature.zeros != report.nullity) {
      throw InternalInconsistency("signature disagrees with rank/nullity");
    }
    RowEchelon radical(dim());
    for (const auto& v : report.radical_basis) radical.insert(v);
    for (int i = 0; i < dim(); ++i) {
      for (const auto& v : report.radical_basis) {
        if (!radical.contains(multiply(basis_element(i), v))) {
          throw InternalInconsistency("form radical is not an ideal");
        }
      }
    }
    return report;
  }

  /// Exhaustive associativity check of the form over all basis triples,
  /// regardless of dimension.  Throws InternalInconsistency on failure.
  void verify_invariance() const {
    for (int i = 0; i < dim(); ++i) {
      for (int j = 0; j < dim(); ++j) {
        for (int k = 0; k < dim(); ++k) {
          if (pairing_left(i, j, k) != pairing_left(k, j, i)) {
            throw InternalInconsistency(
                "form does not associate with the product");
          }
        }
      }
    }
  }

  /// Exhaustive check that every ρ_t is an algebra automorphism and an
  /// isometry of the form.  Since all products with the same adjacency
  /// pattern share their coefficients, transporting the structure
  /// constants reduces each triple to index comparisons.
  void verify_rho_automorphisms() const {
    for (int t = 0; t < dim(); ++t) {
      for (int i = 0; i < dim(); ++i) {
        const int ti = system_.circ(t, i);
        for (int j = 0; j < dim(); ++j) {
          const int tj = system_.circ(t, j);
          const bool adj = system_.adjacent(i, j);
          if ((i == j) != (ti == tj) || adj != system_.adjacent(ti, tj)) {
            throw InternalInconsistency("ρ does not preserve the diagram");
          }
          if (adj && system_.circ(ti, tj) !=
                         system_.circ(t, system_.circ(i, j))) {
            throw InternalInconsistency("ρ is not multiplicative");
          }
          if (basis_form(ti, tj) != basis_form(i, j)) {
            throw InternalInconsistency("ρ is not an isometry");
          }
        }
      }
    }
  }

  /// Structure constants in the shape quotients consume.
  AlgebraTables tables() const {
    AlgebraTables t;
    t.dim = dim();
    t.basis_labels.resize(dim());
    for (int i = 0; i < dim(); ++i) t.basis_labels[i] = i;
    t.product.assign(dim(), std::vector<AlgebraElement>(dim()));
    for (int i = 0; i < dim(); ++i) {
      for (int j = 0; j < dim(); ++j) t.product[i][j] = basis_product(i, j);
    }
    t.gram = gram();
    return t;
  }

  /// Partition of the basis into subalgebras pairing trivially with each
  /// other: the connected components of the system, re-verified against
  /// the structure constants.
  std::vector<std::vector<int>> decompose() const {
    auto components = connected_components(system_);
    std::vector<int> component_of(dim(), -1);
    for (std::size_t c = 0; c < components.size(); ++c) {
      for (int v : components[c]) component_of[v] = static_cast<int>(c);
    }
    for (int i = 0; i < dim(); ++i) {
      for (int j = 0; j < dim(); ++j) {
        if (component_of[i] == component_of[j]) continue;
        if (!is_zero(basis_product(i, j)) || basis_form(i, j) != 0) {
          throw InternalInconsistency(
              "cross-component product or pairing is nonzero");
        }
      }
    }
    return components;
  }

  /// Whether t ↦ ρ_t extends to a faithful action of the generated group,
  /// cross-checked against centre-freeness of the group.
  bool rho_is_faithful(std::size_t budget = kDefaultGroupBudget) const {
    const auto elements = enumerate_group(system_.involutions(), budget);
    bool faithful = true;
    for (const auto& g : elements) {
      if (g.is_identity()) continue;
      bool acts_trivially = true;
      for (const auto& t : system_.involutions()) {
        if (!(t.conjugated_by(g) == t)) {
          acts_trivially = false;
          break;
        }
      }
      if (acts_trivially) {
        faithful = false;
        break;
      }
    }
    if (faithful != is_center_free(system_, budget)) {
      throw InternalInconsistency(
          "faithfulness disagrees with centre-freeness");
    }
    return faithful;
  }

 private:
  void check_element(const AlgebraElement& v) const {
    if (static_cast<int>(v.size()) != dim()) {
      throw ShapeError("element has wrong length");
    }
  }

  bool is_axis_multiple(const AlgebraElement& v, int i) const {
    for (int j = 0; j < dim(); ++j) {
      if (j != i && v[j] != 0) return false;
    }
    return v[i] != 0;
  }

  void accumulate_basis_product(AlgebraElement& out, int i, int j,
                                const Rational& scale) const {
    if (i == j) {
      out[i] += 2 * scale;
      return;
    }
    if (system_.adjacent(i, j)) {
      const Rational c = scale * alpha_ / 2;
      out[i] += c;
      out[j] += c;
      out[system_.circ(i, j)] -= c;
    }
  }

  /// (x^i · x^j | x^k), evaluated sparsely.
  Rational pairing_left(int i, int j, int k) const {
    if (i == j) return 2 * basis_form(i, k);
    if (!system_.adjacent(i, j)) return 0;
    return alpha_ / 2 *
           (basis_form(i, k) + basis_form(j, k) -
            basis_form(system_.circ(i, j), k));
  }

  int regular_k() const {
    if (connected_components(system_).size() != 1) {
      throw Decomposable("system is not indecomposable");
    }
    const RegularityReport reg = regularity(system_);
    if (!reg.k) {
      throw InternalInconsistency("connected system is not regular");
    }
    return *reg.k;
  }

  void validate_invariance() {
    const int n = dim();
    auto check_triple = [&](int i, int j, int k) {
      if (pairing_left(i, j, k) != pairing_left(k, j, i)) {
        throw InternalInconsistency(
            "form does not associate with the product");
      }
    };
    if (n <= kExhaustiveLimit) {
      validation_exhaustive_ = true;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          for (int k = 0; k < n; ++k) check_triple(i, j, k);
        }
      }
    } else {
      validation_exhaustive_ = false;
      SampleRng rng(validation_seed_);
      for (int s = 0; s < kSampleCount; ++s) {
        const int i = static_cast<int>(rng.index(n));
        const int j = static_cast<int>(rng.index(n));
        const int k = static_cast<int>(rng.index(n));
        check_triple(i, j, k);
      }
    }
  }

  TranspositionSystem system_;
  Rational alpha_;
  Rational beta_;
  std::uint64_t validation_seed_;
  bool validation_exhaustive_ = false;
};

/// Quotient by the radical of the form: picks the gram pivot columns as
/// representative basis vectors, projects products onto them modulo the
/// radical, and re-checks that the result is well defined (the radical is
/// an ideal, the projection is exact, and the quotient form is
/// nondegenerate).
inline AlgebraTables nondegenerate_quotient(const AlgebraTables& t) {
  const int n = t.dim;
  if (static_cast<int>(t.gram.size()) != n ||
      static_cast<int>(t.product.size()) != n) {
    throw ShapeError("inconsistent table sizes");
  }
  const std::vector<QVec> kernel = nullspace_basis(t.gram);
  RowEchelon radical(n);
  for (const auto& v : kernel) radical.insert(QVec(v));
  for (int i = 0; i < n; ++i) {
    for (const auto& v : kernel) {
      QVec w(n, 0);
      for (int j = 0; j < n; ++j) {
        if (v[j] != 0) axpy(w, v[j], t.product[i][j]);
      }
      if (!radical.contains(w)) {
        throw InternalInconsistency("radical is not an ideal; quotient "
                                    "product would be ill-defined");
      }
    }
  }

  QMat reduced = t.gram;
  const std::vector<int> pivots = rref(reduced);
  const int r = static_cast<int>(pivots.size());

  // Solve gram[:, pivots] · λ = gram · w to express w modulo the radical.
  QMat a(n, QVec(r, 0));
  for (int row = 0; row < n; ++row) {
    for (int c = 0; c < r; ++c) a[row][c] = t.gram[row][pivots[c]];
  }
  auto project = [&](const QVec& w) {
    auto lambda = solve(a, matvec(t.gram, w));
    if (!lambda) {
      throw InternalInconsistency("projection onto representatives failed");
    }
    QVec residue = w;
    for (int c = 0; c < r; ++c) {
      if ((*lambda)[c] != 0) residue[pivots[c]] -= (*lambda)[c];
    }
    if (!radical.contains(residue)) {
      throw InternalInconsistency("projection residue is not radical");
    }
    return *lambda;
  };

  AlgebraTables q;
  q.dim = r;
  q.basis_labels.resize(r);
  for (int c = 0; c < r; ++c) {
    q.basis_labels[c] =
        t.basis_labels.empty() ? pivots[c] : t.basis_labels[pivots[c]];
  }
  q.product.assign(r, std::vector<AlgebraElement>(r));
  for (int c = 0; c < r; ++c) {
    for (int d = 0; d < r; ++d) {
      q.product[c][d] = project(t.product[pivots[c]][pivots[d]]);
    }
  }
  q.gram.assign(r, QVec(r, 0));
  for (int c = 0; c < r; ++c) {
    for (int d = 0; d < r; ++d) q.gram[c][d] = t.gram[pivots[c]][pivots[d]];
  }
  {
    QMat copy = q.gram;
    if (static_cast<int>(rref(copy).size()) != r) {
      throw InternalInconsistency("quotient form is degenerate");
    }
  }
  return q;
}

}  // namespace matsuo
