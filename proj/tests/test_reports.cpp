#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "matsuo/matsuo_algebra.hpp"
#include "matsuo/reports.hpp"
#include "matsuo/transposition_system.hpp"
#include "matsuo/verify.hpp"
#include "matsuo/zhu.hpp"

using namespace matsuo;

TEST_CASE("group report fields", "[reports]") {
  const Json j = group_report_json(build_symmetric(4), kDefaultGroupBudget);
  REQUIRE(j["degree"] == 4);
  REQUIRE(j["involutions"] == 6);
  REQUIRE(j["three_transposition"] == true);
  REQUIRE(j["offending_pair"].is_null());
  REQUIRE(j["components"] == 1);
  REQUIRE(j["component_sizes"] == Json::array({6}));
  REQUIRE(j["indecomposable"] == true);
  REQUIRE(j["k"] == 4);
  REQUIRE(j["group_order"] == 24);
  REQUIRE(j["center_free"] == true);
  REQUIRE(j["skipped_checks"].empty());

  // Over budget: enumeration-dependent fields go null, the rest stays.
  const Json capped = group_report_json(build_symmetric(4), 10);
  REQUIRE(capped["involutions"] == 6);
  REQUIRE(capped["group_order"].is_null());
  REQUIRE(capped["center_free"].is_null());
  REQUIRE(capped["skipped_checks"] ==
          Json::array({"group_order", "center_free"}));
}

TEST_CASE("algebra report pins its key order", "[reports]") {
  const MatsuoAlgebra a(build_symmetric(3), rat(1, 2), rat(1, 2));
  const Json j = algebra_report_json(a, kDefaultGroupBudget);
  const std::vector<std::string> expected_keys = {
      "dim",           "alpha",          "beta",
      "k",             "indecomposable", "rank",
      "nullity",       "signature",      "central_charge",
      "conformal_coefficient",           "quotient_dim",
      "rho_faithful",  "validation",     "notes"};
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) {
    (void)value;
    keys.push_back(key);
  }
  REQUIRE(keys == expected_keys);
  REQUIRE(j["dim"] == 3);
  REQUIRE(j["alpha"] == "1/2");
  REQUIRE(j["signature"] == Json::array({3, 0, 0}));
  REQUIRE(j["central_charge"] == "6/5");
  REQUIRE(j["conformal_coefficient"] == "4/5");
  REQUIRE(j["quotient_dim"] == 3);
  REQUIRE(j["rho_faithful"] == true);
  REQUIRE(j["validation"]["exhaustive"] == true);
  REQUIRE(j["notes"].empty());

  const MatsuoAlgebra degenerate(build_symmetric(3), rat(4), rat(1));
  const Json d = algebra_report_json(degenerate, kDefaultGroupBudget);
  REQUIRE(d["rank"] == 1);
  REQUIRE(d["nullity"] == 2);
  REQUIRE(d["signature"] == Json::array({1, 0, 2}));
  REQUIRE(d["quotient_dim"] == 1);
}

TEST_CASE("label table CSV is byte-stable", "[reports]") {
  const std::string expected =
      "# probe\n"
      "n,r,s,canonical_r,canonical_s,h\n"
      "1,1,1,1,1,0\n"
      "1,1,2,1,2,1/16\n"
      "1,1,3,1,3,1/2\n"
      "1,2,1,1,3,1/2\n"
      "1,2,2,1,2,1/16\n"
      "1,2,3,1,1,0\n";
  REQUIRE(label_table_csv(1, "probe") == expected);
  REQUIRE(label_table_csv(1, "probe") == label_table_csv(1, "probe"));
}

TEST_CASE("fusion reports", "[reports]") {
  const Json pair = fusion_pair_json(MinimalLabel{1, 2, 2}, MinimalLabel{1, 2, 2});
  REQUIRE(pair["n"] == 1);
  REQUIRE(pair["outputs"].size() == 2);
  REQUIRE(pair["outputs"][0]["r"] == 1);
  REQUIRE(pair["outputs"][0]["s"] == 1);
  REQUIRE(pair["outputs"][0]["mult"] == 1);
  REQUIRE(pair["outputs"][1]["s"] == 3);

  const Json table = fusion_table_json(1);
  REQUIRE(table["labels"].size() == 3);
  // Unordered pairs of 3 labels: 6 rows.
  REQUIRE(table["table"].size() == 6);
  for (const auto& entry : table["table"]) {
    REQUIRE(entry["outputs"].size() >= 1);
  }
}

TEST_CASE("branch and sigma reports", "[reports]") {
  const Json b = branch_json(2, 0);
  REQUIRE(b["summands"].size() == 2);
  REQUIRE(b["summands"][0]["k"] == 0);
  REQUIRE(b["summands"][0]["h"] == "0");
  REQUIRE(b["summands"][1]["r"] == 3);
  REQUIRE(b["summands"][1]["h"] == "3/2");

  const Json s = sigma_json(sigma_type_weights(1));
  REQUIRE(s["weights"] == Json::array({"0", "1/16", "1/2"}));
  REQUIRE(s["sigma_type"] == Json::array({"0", "1/2"}));
  REQUIRE(s["excluded"] == Json::array({"1/16"}));
}

TEST_CASE("zhu report", "[reports]") {
  const Json j = zhu_json(quotient_dimension(2), sector_labels(2));
  REQUIRE(j["n"] == 2);
  REQUIRE(j["group_order"] == 6);
  REQUIRE(j["ideal_dim"] == 1);
  REQUIRE(j["quotient_dim"] == 5);
  // The lone ideal pivot is the identity coordinate, so the coset basis
  // starts at the first transposition.
  REQUIRE(j["basis"].size() == 5);
  REQUIRE(j["basis"][0] == "(1 2)");
  REQUIRE(j["saturation_verified"] == true);
  REQUIRE(j["sectors"] == Json::array({0, 2}));
}

TEST_CASE("coefficient reports", "[reports]") {
  const Json t = toeplitz_json(jordan_exp(3), false);
  REQUIRE(t["m"] == 3);
  REQUIRE(t["negated"] == false);
  REQUIRE(t["sequence"] == Json::array({"1", "1", "1/2"}));

  const WordPolynomial p =
      WordPolynomial::generator(2) * WordPolynomial::generator(2) -
      WordPolynomial::generator(4);
  const Json terms = polynomial_json(p);
  REQUIRE(terms.size() == 2);
  REQUIRE(terms[0]["coeff"] == "-1");
  REQUIRE(terms[0]["word"] == Json::array({"Q4"}));
  REQUIRE(terms[1]["coeff"] == "1");
  REQUIRE(terms[1]["word"] == Json::array({"Q2", "Q2"}));

  const Json sub = substitution_json(verify_substitution(3));
  REQUIRE(sub["ok"] == true);
  REQUIRE(sub["first_failure"].is_null());
  REQUIRE(sub["boundary_overrides"].size() == 3);
  REQUIRE(sub["boundary_overrides"][0]["k"] == 2);
  REQUIRE(sub["boundary_overrides"][0]["j"] == 3);
  REQUIRE(sub["boundary_overrides"][0]["value"] == "-Q3");
}

TEST_CASE("meta envelope and dump determinism", "[reports]") {
  Json config;
  config["n"] = 2;
  const Json meta = meta_json("zhu", config);
  REQUIRE(meta["tool"] == "matsuo");
  REQUIRE(meta["command"] == "zhu");
  REQUIRE(meta["config"]["n"] == 2);
  REQUIRE_FALSE(meta["version"].get<std::string>().empty());

  const MatsuoAlgebra a(build_symmetric(4), rat(1, 2), rat(1, 2));
  const std::string once = algebra_report_json(a, kDefaultGroupBudget).dump(2);
  const std::string twice = algebra_report_json(a, kDefaultGroupBudget).dump(2);
  REQUIRE(once == twice);
}

TEST_CASE("acceptance harness reports one line per criterion", "[reports]") {
  const auto results = run_acceptance(2);
  REQUIRE(results.size() == 11);
  for (std::size_t i = 0; i < results.size(); ++i) {
    REQUIRE(results[i].index == static_cast<int>(i + 1));
    REQUIRE(results[i].passed);
  }
  const std::string text = format_results(results);
  REQUIRE(text.find("PASS") != std::string::npos);
  REQUIRE(all_passed(results));
}
