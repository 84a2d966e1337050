#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "matsuo/coeffs.hpp"
#include "matsuo/matsuo_algebra.hpp"
#include "matsuo/rational.hpp"
#include "matsuo/rng.hpp"
#include "matsuo/transposition_system.hpp"
#include "matsuo/virasoro.hpp"
#include "matsuo/zhu.hpp"

namespace matsuo {

/// One verification criterion's outcome.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace verify_detail {

inline MatsuoAlgebra default_algebra(int points) {
  return MatsuoAlgebra(build_symmetric(points), Rational(1, 2),
                       Rational(1, 2));
}

inline void expect(bool condition, const std::string& what) {
  if (!condition) throw Error(what);
}

/// Accumulates fusion of a multiset with one more label.
inline std::map<std::pair<int, int>, int> fuse_into(
    const FusionResult& left, const MinimalLabel& right) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& [rs, mult] : left.terms) {
    const FusionResult step =
        fuse(MinimalLabel{left.n, rs.first, rs.second}, right);
    for (const auto& [rs2, mult2] : step.terms) {
      out[rs2] += mult * mult2;
    }
  }
  return out;
}

inline void criterion_gram_nondegenerate(int max_rank, std::ostream& detail) {
  const int dims[] = {1, 3, 6, 10, 15, 21};
  const int top = std::min(6, max_rank);
  for (int n = 1; n <= top; ++n) {
    const MatsuoAlgebra algebra = default_algebra(n + 1);
    expect(algebra.dim() == dims[n - 1], "unexpected dimension");
    expect(algebra.form_report().nullity == 0,
           "nonzero nullity at n = " + std::to_string(n));
  }
  detail << "nullity 0 for n = 1.." << top;
}

inline void criterion_signature_positive(int max_rank, std::ostream& detail) {
  const int top = std::min(6, max_rank);
  for (int n = 1; n <= top; ++n) {
    const MatsuoAlgebra algebra = default_algebra(n + 1);
    const Signature s = algebra.form_report().signature;
    expect(s == Signature{algebra.dim(), 0, 0},
           "indefinite signature at n = " + std::to_string(n));
  }
  detail << "signature (dim,0,0) for n = 1.." << top;
}

inline void criterion_conformal_data(int max_rank, std::ostream& detail) {
  if (max_rank >= 2) {
    const MatsuoAlgebra algebra = default_algebra(3);
    expect(algebra.conformal_coefficient() == Rational(4, 5),
           "conformal coefficient is not 4/5");
    const AlgebraElement omega = algebra.conformal_vector();
    for (const auto& c : omega) {
      expect(c == Rational(4, 5), "conformal vector is not (4/5)·sum");
    }
    expect(algebra.central_charge() == Rational(6, 5),
           "central charge is not 6/5");
    expect(central_charge_c(1) + central_charge_c(2) == Rational(6, 5),
           "6/5 does not split as c_1 + c_2");
  }
  const int top = std::min(8, max_rank);
  for (int n = 1; n <= top; ++n) {
    Rational sum = 0;
    for (int i = 1; i <= n; ++i) sum += central_charge_c(i);
    expect(default_algebra(n + 1).central_charge() == sum,
           "central charge mismatch at n = " + std::to_string(n));
  }
  detail << "charge = partial series sums for n = 1.." << top;
}

inline void criterion_conformal_unit(int max_rank, std::ostream& detail) {
  const int top_points = std::min(11, max_rank + 1);
  int algebras = 0;
  for (int m = 2; m <= top_points; ++m) {
    const MatsuoAlgebra algebra = default_algebra(m);
    if (algebra.dim() > 64) continue;
    const AlgebraElement omega = algebra.conformal_vector();
    for (int j = 0; j < algebra.dim(); ++j) {
      AlgebraElement twice = algebra.basis_element(j);
      for (auto& c : twice) c *= 2;
      expect(algebra.multiply(omega, algebra.basis_element(j)) == twice,
             "ω·x ≠ 2x at m = " + std::to_string(m));
    }
    ++algebras;
  }
  detail << "ω·x = 2x on every axis, " << algebras << " algebras (dim ≤ 64)";
}

inline void criterion_form_invariance(int max_rank, std::ostream& detail) {
  const int top_points = std::min(11, max_rank + 1);
  int algebras = 0;
  for (int m = 2; m <= top_points; ++m) {
    const MatsuoAlgebra algebra = default_algebra(m);
    if (algebra.dim() > 64) continue;
    algebra.verify_invariance();
    algebra.verify_rho_automorphisms();
    ++algebras;
  }
  detail << "associative form + automorphisms, " << algebras
         << " algebras (dim ≤ 64)";
}

inline void criterion_series_data(int, std::ostream& detail) {
  expect(central_charge_c(1) == Rational(1, 2), "c_1 ≠ 1/2");
  expect(central_charge_c(2) == Rational(7, 10), "c_2 ≠ 7/10");
  expect(highest_weight(1, 2, 1) == Rational(1, 2), "h ≠ 1/2");
  expect(highest_weight(1, 2, 2) == Rational(1, 16), "h ≠ 1/16");
  expect(highest_weight(2, 1, 3) == Rational(3, 5), "h ≠ 3/5");
  expect(highest_weight(2, 3, 1) == Rational(3, 2), "h ≠ 3/2");
  detail << "c_1, c_2 and the four quoted weights";
}

inline void criterion_weights_and_closure(int max_rank, std::ostream& detail) {
  const int scan_top = std::min(12, max_rank);
  for (int n = 1; n <= scan_top; ++n) {
    expect(weight_coincidence_scan(n).ok,
           "weight coincidence failure at n = " + std::to_string(n));
  }
  const int closure_top = std::min(10, max_rank);
  for (int n = 1; n <= closure_top; ++n) {
    std::vector<MinimalLabel> family;
    for (int k = 0; 2 * k <= n; ++k) {
      family.push_back(canonical(MinimalLabel{n, 2 * k + 1, 1}));
    }
    expect(fusion_closed(n, family),
           "family not closed at n = " + std::to_string(n));
  }
  detail << "scan n ≤ " << scan_top << ", closure n ≤ " << closure_top;
}

inline void criterion_fusion_sanity(int max_rank, std::ostream& detail) {
  const int comm_top = std::min(8, max_rank);
  for (int n = 1; n <= comm_top; ++n) {
    const auto labels = canonical_labels(n);
    const MinimalLabel vacuum{n, 1, 1};
    for (const auto& a : labels) {
      const FusionResult unit = fuse(vacuum, a);
      expect(unit.terms.size() == 1 &&
                 unit.terms.count({canonical(a).r, canonical(a).s}) == 1,
             "vacuum is not a unit");
      for (const auto& b : labels) {
        expect(fuse(a, b) == fuse(b, a), "fusion is not commutative");
      }
    }
  }
  const int assoc_top = std::min(4, max_rank);
  for (int n = 1; n <= assoc_top; ++n) {
    const auto labels = canonical_labels(n);
    for (const auto& a : labels) {
      for (const auto& b : labels) {
        const FusionResult ab = fuse(a, b);
        for (const auto& c : labels) {
          expect(fuse_into(ab, c) == fuse_into(fuse(b, c), a),
                 "fusion is not associative");
        }
      }
    }
  }
  detail << "comm/unit n ≤ " << comm_top << ", assoc n ≤ " << assoc_top;
}

inline void criterion_coefficients(int, std::ostream& detail) {
  for (int m = 1; m <= 20; ++m) {
    expect(jordan_exp(m) * jordan_exp(m, true) == LowerToeplitz::identity(m),
           "exp·exp⁻¹ ≠ identity at m = " + std::to_string(m));
  }
  for (int j = 0; j <= 15; ++j) {
    const WordPolynomial p = p_half(15, j);
    Rational expected = Rational(1) / factorial(j);
    if (j % 2 == 1) expected = -expected;
    expect(p.terms().size() == 1, "wrong p_half support");
    const auto& [word, coeff] = *p.terms().begin();
    expect(static_cast<int>(word.letters.size()) == j &&
               word.degree() == j && coeff == expected,
           "wrong p_half coefficient at j = " + std::to_string(j));
  }
  for (int n = 2; n <= 10; ++n) {
    expect(verify_substitution(n).ok,
           "substitution identity failed at N = " + std::to_string(n));
  }
  const WordPolynomial q2 = WordPolynomial::generator(2);
  const WordPolynomial q4 = WordPolynomial::generator(4);
  expect(p_zero(8, 4, 4) == q2 * q2 - q4, "p_zero(8,4,4) ≠ -Q4 + Q2*Q2");
  detail << "Toeplitz inverse m ≤ 20, reciprocal factorials j ≤ 15, "
            "substitution N ≤ 10";
}

inline void criterion_quotient(int max_rank, std::ostream& detail) {
  const int top = std::min(3, max_rank);
  for (int n = 1; n <= top; ++n) {
    const QuotientReport report = quotient_dimension(n);
    expect(report.saturation_verified, "saturation pass did not run");
    expect(report.ideal_dim + report.quotient_dim ==
               static_cast<int>(report.group_order),
           "dimension bookkeeping broken");
    const SymmetricGroupAlgebra algebra(n + 1);
    std::vector<QVec> gens = ideal_generators(algebra);
    std::reverse(gens.begin(), gens.end());
    expect(saturate_two_sided(algebra, gens).rank() == report.ideal_dim,
           "rank depends on generator order (reversed)");
    SampleRng rng(20260823);
    for (std::size_t i = gens.size(); i > 1; --i) {
      std::swap(gens[i - 1], gens[rng.index(i)]);
    }
    expect(saturate_two_sided(algebra, gens).rank() == report.ideal_dim,
           "rank depends on generator order (shuffled)");
    if (n == 1) {
      expect(report.quotient_dim == 2 && report.ideal_dim == 0,
             "n = 1 quotient is not the full 2-dimensional algebra");
    }
  }
  detail << "stable, order-independent saturation for n = 1.." << top;
}

inline void criterion_degenerate_regression(int max_rank,
                                            std::ostream& detail) {
  if (max_rank < 2) {
    detail << "skipped (needs rank ≥ 2)";
    return;
  }
  const MatsuoAlgebra algebra(build_symmetric(3), Rational(4), Rational(1));
  const FormReport form = algebra.form_report();  // radical-ideal check inside
  expect(form.nullity == 2, "nullity is not 2");
  expect(form.signature == Signature{1, 0, 2}, "signature is not (1,0,2)");
  const AlgebraTables quotient = nondegenerate_quotient(algebra.tables());
  expect(quotient.dim == 1, "quotient dimension is not 1");
  detail << "nullity 2, radical is an ideal, quotient dim 1";
}

}  // namespace verify_detail

/// Runs the full verification suite, families capped at `max_rank`.
inline std::vector<CriterionResult> run_acceptance(int max_rank = 12) {
  using Runner = std::function<void(int, std::ostream&)>;
  const std::vector<std::pair<std::string, Runner>> criteria = {
      {"gram-nondegenerate", verify_detail::criterion_gram_nondegenerate},
      {"signature-positive", verify_detail::criterion_signature_positive},
      {"conformal-data", verify_detail::criterion_conformal_data},
      {"conformal-unit", verify_detail::criterion_conformal_unit},
      {"form-invariance", verify_detail::criterion_form_invariance},
      {"series-data", verify_detail::criterion_series_data},
      {"weights-and-closure", verify_detail::criterion_weights_and_closure},
      {"fusion-sanity", verify_detail::criterion_fusion_sanity},
      {"coefficient-systems", verify_detail::criterion_coefficients},
      {"group-algebra-quotient", verify_detail::criterion_quotient},
      {"degenerate-regression",
       verify_detail::criterion_degenerate_regression},
  };
  std::vector<CriterionResult> results;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    CriterionResult r;
    r.index = index++;
    r.name = name;
    std::ostringstream detail;
    try {
      run(max_rank, detail);
      r.passed = true;
      r.detail = detail.str();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

/// Formats one line per criterion; stable, grep-friendly output.
inline std::string format_results(const std::vector<CriterionResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += r.passed ? "PASS" : "FAIL";
    out += "  ";
    out += std::to_string(r.index);
    if (r.index < 10) out += " ";
    out += "  " + r.name;
    if (!r.detail.empty()) out += " — " + r.detail;
    out += "\n";
  }
  return out;
}

inline bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.passed; });
}

}  // namespace matsuo
