#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matsuo/coeffs.hpp"
#include "matsuo/matsuo_algebra.hpp"
#include "matsuo/rational.hpp"
#include "matsuo/root_system.hpp"
#include "matsuo/transposition_system.hpp"
#include "matsuo/version.hpp"
#include "matsuo/virasoro.hpp"
#include "matsuo/zhu.hpp"

namespace matsuo {

/// All reports use key-order-preserving JSON so identical runs emit
/// identical bytes.
using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& q) { return to_string(q); }

/// Reproducibility envelope: tool identity, the exact command, and the
/// fully resolved configuration (including any seeds).
inline Json meta_json(const std::string& command, const Json& config) {
  Json meta;
  meta["tool"] = "matsuo";
  meta["version"] = version;
  meta["command"] = command;
  meta["config"] = config;
  return meta;
}

inline Json group_report_json(const TranspositionSystem& system,
                              std::size_t budget) {
  Json j;
  j["degree"] = system.degree();
  j["involutions"] = system.size();
  j["three_transposition"] = system.verdict().ok;
  if (system.verdict().offending) {
    j["offending_pair"] = {system.verdict().offending->first,
                           system.verdict().offending->second};
  } else {
    j["offending_pair"] = nullptr;
  }
  const auto components = connected_components(system);
  j["components"] = components.size();
  Json sizes = Json::array();
  for (const auto& c : components) sizes.push_back(c.size());
  j["component_sizes"] = sizes;
  j["indecomposable"] = components.size() == 1;
  const RegularityReport reg = regularity(system);
  j["k"] = reg.k ? Json(*reg.k) : Json(nullptr);
  Json per = Json::array();
  for (const auto& ck : reg.component_k) {
    per.push_back(ck ? Json(*ck) : Json(nullptr));
  }
  j["component_k"] = per;
  try {
    const auto elements = enumerate_group(system.involutions(), budget);
    j["group_order"] = elements.size();
    j["center_free"] = is_center_free(system, elements);
    j["skipped_checks"] = Json::array();
  } catch (const BudgetExceeded&) {
    j["group_order"] = nullptr;
    j["center_free"] = nullptr;
    j["skipped_checks"] = {"group_order", "center_free"};
  }
  return j;
}

inline Json signature_json(const Signature& s) {
  return Json::array({s.positives, s.negatives, s.zeros});
}

/// Cap below which the radical quotient is materialized and re-verified
/// inside the algebra report.
inline constexpr int kQuotientTableLimit = 64;

inline Json algebra_report_json(const MatsuoAlgebra& algebra,
                                std::size_t budget) {
  Json j;
  j["dim"] = algebra.dim();
  j["alpha"] = rational_json(algebra.alpha());
  j["beta"] = rational_json(algebra.beta());
  const RegularityReport reg = regularity(algebra.system());
  j["k"] = reg.k ? Json(*reg.k) : Json(nullptr);
  const bool indecomposable = is_indecomposable(algebra.system());
  j["indecomposable"] = indecomposable;
  const FormReport form = algebra.form_report();
  j["rank"] = form.rank;
  j["nullity"] = form.nullity;
  j["signature"] = signature_json(form.signature);
  std::vector<std::string> notes;
  try {
    j["central_charge"] = rational_json(algebra.central_charge());
    j["conformal_coefficient"] =
        rational_json(algebra.conformal_coefficient());
  } catch (const Decomposable&) {
    j["central_charge"] = nullptr;
    j["conformal_coefficient"] = nullptr;
    notes.push_back("decomposable: no conformal vector");
  } catch (const SingularParameter&) {
    j["central_charge"] = nullptr;
    j["conformal_coefficient"] = nullptr;
    notes.push_back("singular parameters: kα + 4 = 0");
  }
  if (algebra.dim() <= kQuotientTableLimit) {
    const AlgebraTables quotient = nondegenerate_quotient(algebra.tables());
    if (quotient.dim != form.rank) {
      throw InternalInconsistency("quotient dimension disagrees with rank");
    }
    j["quotient_dim"] = quotient.dim;
  } else {
    j["quotient_dim"] = form.rank;
  }
  try {
    j["rho_faithful"] = algebra.rho_is_faithful(budget);
  } catch (const BudgetExceeded&) {
    j["rho_faithful"] = nullptr;
    notes.push_back("rho_faithful skipped: group enumeration over budget");
  }
  Json validation;
  validation["exhaustive"] = algebra.validation_exhaustive();
  validation["seed"] = algebra.validation_seed();
  validation["samples"] =
      algebra.validation_exhaustive() ? 0 : MatsuoAlgebra::kSampleCount;
  j["validation"] = validation;
  j["notes"] = notes;
  return j;
}

/// CSV over the full label rectangle; the comment header carries the
/// reproducibility envelope.
inline std::string label_table_csv(int n, const std::string& meta_comment) {
  std::string out;
  if (!meta_comment.empty()) out += "# " + meta_comment + "\n";
  out += "n,r,s,canonical_r,canonical_s,h\n";
  for (int r = 1; r <= n + 1; ++r) {
    for (int s = 1; s <= n + 2; ++s) {
      const MinimalLabel l{n, r, s};
      const MinimalLabel c = canonical(l);
      out += std::to_string(n) + "," + std::to_string(r) + "," +
             std::to_string(s) + "," + std::to_string(c.r) + "," +
             std::to_string(c.s) + "," + to_string(highest_weight(l)) + "\n";
    }
  }
  return out;
}

inline Json label_json(const MinimalLabel& l) {
  Json j;
  j["r"] = l.r;
  j["s"] = l.s;
  return j;
}

inline Json fusion_outputs_json(const FusionResult& result) {
  Json outputs = Json::array();
  for (const auto& [rs, mult] : result.terms) {
    Json term;
    term["r"] = rs.first;
    term["s"] = rs.second;
    term["mult"] = mult;
    outputs.push_back(term);
  }
  return outputs;
}

inline Json fusion_pair_json(const MinimalLabel& a, const MinimalLabel& b) {
  Json j;
  j["n"] = a.n;
  j["inputs"] = Json::array({label_json(a), label_json(b)});
  j["outputs"] = fusion_outputs_json(fuse(a, b));
  return j;
}

/// The full table over unordered pairs of canonical labels.
inline Json fusion_table_json(int n) {
  Json j;
  j["n"] = n;
  const auto labels = canonical_labels(n);
  Json label_list = Json::array();
  for (const auto& l : labels) label_list.push_back(label_json(l));
  j["labels"] = label_list;
  Json table = Json::array();
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = a; b < labels.size(); ++b) {
      Json entry;
      entry["inputs"] = Json::array({label_json(labels[a]),
                                     label_json(labels[b])});
      entry["outputs"] = fusion_outputs_json(fuse(labels[a], labels[b]));
      table.push_back(entry);
    }
  }
  j["table"] = table;
  return j;
}

inline Json branch_json(int n, int b_index) {
  Json j;
  j["n"] = n;
  j["j"] = b_index;
  Json summands = Json::array();
  for (const auto& summand : branching_labels(n, b_index)) {
    Json s;
    s["k"] = summand.k;
    s["r"] = 2 * summand.k + 1;
    s["s"] = 2 * b_index + 1;
    s["h"] = rational_json(summand.weight);
    summands.push_back(s);
  }
  j["summands"] = summands;
  return j;
}

inline Json sigma_json(const SigmaTypeReport& report) {
  Json j;
  j["n"] = report.n;
  Json weights = Json::array();
  for (const auto& h : report.weights) weights.push_back(rational_json(h));
  j["weights"] = weights;
  Json sigma = Json::array();
  for (const auto& h : report.sigma_type) sigma.push_back(rational_json(h));
  j["sigma_type"] = sigma;
  Json excluded = Json::array();
  for (const auto& h : report.excluded) excluded.push_back(rational_json(h));
  j["excluded"] = excluded;
  return j;
}

inline Json zhu_json(const QuotientReport& report,
                     const std::vector<int>& sectors) {
  Json j;
  j["n"] = report.n;
  j["group_order"] = report.group_order;
  j["ideal_dim"] = report.ideal_dim;
  j["quotient_dim"] = report.quotient_dim;
  Json basis = Json::array();
  for (const auto& g : report.basis) basis.push_back(g.cycle_string());
  j["basis"] = basis;
  j["saturation_verified"] = report.saturation_verified;
  j["sectors"] = sectors;
  return j;
}

inline Json toeplitz_json(const LowerToeplitz& t, bool negated) {
  Json j;
  j["m"] = t.size();
  j["negated"] = negated;
  Json seq = Json::array();
  for (const auto& a : t.sequence()) seq.push_back(rational_json(a));
  j["sequence"] = seq;
  return j;
}

inline Json polynomial_json(const WordPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [word, coeff] : p.terms()) {
    Json term;
    term["coeff"] = rational_json(coeff);
    Json letters = Json::array();
    for (int l : word.letters) {
      letters.push_back(l == 1 ? "E" : "Q" + std::to_string(l));
    }
    term["word"] = letters;
    terms.push_back(term);
  }
  return terms;
}

inline Json substitution_json(const SubstitutionReport& report) {
  Json j;
  j["N"] = report.N;
  j["ok"] = report.ok;
  if (report.first_failure) {
    Json f;
    f["i"] = report.first_failure->first;
    f["degree"] = report.first_failure->second;
    j["first_failure"] = f;
  } else {
    j["first_failure"] = nullptr;
  }
  Json overrides = Json::array();
  for (const auto& [k, deg] : report.boundary_overrides) {
    Json o;
    o["k"] = k;
    o["j"] = deg;
    o["value"] = detail::p_zero_recursion(report.N, k, deg).str();
    overrides.push_back(o);
  }
  j["boundary_overrides"] = overrides;
  return j;
}

}  // namespace matsuo
