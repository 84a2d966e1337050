// Command-line front end: constructs transposition systems and their
// algebras, tabulates minimal-series data, runs the group-algebra
// quotient and the coefficient machinery, and emits deterministic
// JSON/CSV/plain-text reports.
//
// Exit codes: 0 success, 1 a requested check failed, 2 usage or input
// error, 3 budget exhausted, 4 internal cross-check violation.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "matsuo/coeffs.hpp"
#include "matsuo/errors.hpp"
#include "matsuo/group_file.hpp"
#include "matsuo/matsuo_algebra.hpp"
#include "matsuo/rational.hpp"
#include "matsuo/reports.hpp"
#include "matsuo/root_system.hpp"
#include "matsuo/transposition_system.hpp"
#include "matsuo/verify.hpp"
#include "matsuo/virasoro.hpp"
#include "matsuo/zhu.hpp"

namespace {

using matsuo::Json;

/// Where a group comes from: exactly one of the three.
struct GroupSource {
  int symmetric = 0;  // points, 0 = unset
  int weyl_a = 0;     // rank, 0 = unset
  std::string file;

  void require_one() const {
    const int given = (symmetric > 0) + (weyl_a > 0) + !file.empty();
    if (given != 1) {
      throw matsuo::ParseError(
          "give exactly one of --symmetric, --weyl-a, --file");
    }
  }

  matsuo::TranspositionSystem resolve() const {
    require_one();
    if (symmetric > 0) return matsuo::build_symmetric(symmetric);
    if (weyl_a > 0) return matsuo::build_weyl_A(weyl_a).system;
    std::ifstream in(file);
    if (!in) {
      throw matsuo::ParseError("cannot open group file '" + file + "'");
    }
    const matsuo::GroupFile parsed = matsuo::parse_group_file(in);
    return matsuo::TranspositionSystem::from_generators(parsed.generators);
  }

  void describe(Json& config) const {
    if (symmetric > 0) config["symmetric"] = symmetric;
    if (weyl_a > 0) config["weyl_a"] = weyl_a;
    if (!file.empty()) config["file"] = file;
  }
};

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw matsuo::ParseError("cannot open output file '" + out_path + "'");
  }
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string json_scalar_str(const Json& j) {
  if (j.is_null()) return "n/a";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

/// Renders the flat scalar fields of a report as "key: value" lines.
std::string table_from_json(const Json& payload) {
  std::string out;
  for (const auto& [key, value] : payload.items()) {
    if (key == "meta") continue;
    if (value.is_object() || value.is_array()) {
      if (key == "signature" || key == "sectors" ||
          key == "component_sizes") {
        out += key + ": " + value.dump() + "\n";
      }
      continue;
    }
    if (value.is_boolean()) {
      out += key + ": " + yes_no(value.get<bool>()) + "\n";
    } else {
      out += key + ": " + json_scalar_str(value) + "\n";
    }
  }
  return out;
}

struct CommonFlags {
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags& flags,
                std::vector<std::string> formats = {"json", "table"}) {
  std::string help = "output format (";
  for (std::size_t i = 0; i < formats.size(); ++i) {
    if (i) help += "|";
    help += formats[i];
  }
  help += ")";
  cmd->add_option("--format", flags.format, help)
      ->check(CLI::IsMember(formats));
  cmd->add_option("--out", flags.out_path, "write the report to this file");
}

// The output path is deliberately not echoed into the config block: the
// report bytes must not depend on where they are written.
Json config_common(const CommonFlags& flags) {
  Json config;
  config["format"] = flags.format;
  return config;
}

matsuo::MinimalLabel parse_pair(int n, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw matsuo::ParseError("label must look like R,S — got '" + text + "'");
  }
  try {
    const int r = std::stoi(text.substr(0, comma));
    const int s = std::stoi(text.substr(comma + 1));
    return matsuo::MinimalLabel{n, r, s};
  } catch (const std::exception&) {
    throw matsuo::ParseError("bad label '" + text + "'");
  }
}

int emit(Json payload, const std::string& command, Json config,
         const CommonFlags& flags, int exit_code = 0) {
  payload["meta"] = matsuo::meta_json(command, std::move(config));
  if (flags.format == "table") {
    write_output(table_from_json(payload), flags.out_path);
  } else {
    write_output(dump(payload), flags.out_path);
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for transposition-system algebras and "
               "their minimal-series data"};
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- group ------------------------------------------------------------
  auto* group = app.add_subcommand(
      "group", "construct a transposition system and verify it");
  GroupSource group_source;
  CommonFlags group_flags;
  std::size_t group_budget = matsuo::kDefaultGroupBudget;
  group->add_option("--symmetric", group_source.symmetric,
                    "all transpositions on M points");
  group->add_option("--weyl-a", group_source.weyl_a,
                    "reflections of the rank-N type-A root system");
  group->add_option("--file", group_source.file,
                    "generator file (cycle notation, one per line)");
  group->add_option("--budget", group_budget,
                    "group-enumeration budget (elements)");
  add_common(group, group_flags);
  group->callback([&] {
    const matsuo::TranspositionSystem system = group_source.resolve();
    Json config = config_common(group_flags);
    group_source.describe(config);
    config["budget"] = group_budget;
    const Json payload = matsuo::group_report_json(system, group_budget);
    exit_code = emit(payload, "group", config, group_flags,
                     system.verdict().ok ? 0 : 1);
  });

  // ---- algebra ----------------------------------------------------------
  auto* algebra_cmd = app.add_subcommand(
      "algebra", "build the algebra of a system and analyze its form");
  GroupSource algebra_source;
  CommonFlags algebra_flags;
  std::string alpha_text = "1/2";
  std::string beta_text = "1/2";
  std::uint64_t algebra_seed = 0;
  std::size_t algebra_budget = matsuo::kDefaultGroupBudget;
  algebra_cmd->add_option("--symmetric", algebra_source.symmetric,
                          "all transpositions on M points");
  algebra_cmd->add_option("--weyl-a", algebra_source.weyl_a,
                          "reflections of the rank-N type-A root system");
  algebra_cmd->add_option("--file", algebra_source.file, "generator file");
  algebra_cmd->add_option("--alpha", alpha_text,
                          "product parameter (rational P/Q)");
  algebra_cmd->add_option("--beta", beta_text, "form parameter (rational P/Q)");
  algebra_cmd->add_option("--seed", algebra_seed,
                          "seed for sampled validation of large algebras");
  algebra_cmd->add_option("--budget", algebra_budget,
                          "group-enumeration budget (elements)");
  add_common(algebra_cmd, algebra_flags);
  algebra_cmd->callback([&] {
    const matsuo::TranspositionSystem system = algebra_source.resolve();
    const matsuo::MatsuoAlgebra algebra(system,
                                        matsuo::parse_rational(alpha_text),
                                        matsuo::parse_rational(beta_text),
                                        algebra_seed);
    Json config = config_common(algebra_flags);
    algebra_source.describe(config);
    config["alpha"] = alpha_text;
    config["beta"] = beta_text;
    config["seed"] = algebra_seed;
    config["budget"] = algebra_budget;
    const Json payload = matsuo::algebra_report_json(algebra, algebra_budget);
    exit_code = emit(payload, "algebra", config, algebra_flags);
  });

  // ---- fusion -----------------------------------------------------------
  auto* fusion_cmd = app.add_subcommand(
      "fusion", "minimal-series labels, weights and fusion products");
  CommonFlags fusion_flags;
  int fusion_n = 1;
  std::vector<std::string> fusion_pair;
  fusion_cmd->add_option("--n", fusion_n, "series index")->required();
  fusion_cmd->add_option("--pair", fusion_pair,
                         "two labels R,S — fuse just this pair")
      ->expected(2);
  add_common(fusion_cmd, fusion_flags, {"json", "csv", "table"});
  fusion_cmd->callback([&] {
    Json config = config_common(fusion_flags);
    config["n"] = fusion_n;
    if (!fusion_pair.empty()) {
      config["pair"] = fusion_pair;
    }
    if (fusion_flags.format == "csv") {
      std::ostringstream meta;
      meta << "tool=matsuo version=" << matsuo::version
           << " command=fusion n=" << fusion_n;
      write_output(matsuo::label_table_csv(fusion_n, meta.str()),
                   fusion_flags.out_path);
      return;
    }
    Json payload;
    if (fusion_pair.size() == 2) {
      payload = matsuo::fusion_pair_json(parse_pair(fusion_n, fusion_pair[0]),
                                         parse_pair(fusion_n, fusion_pair[1]));
    } else {
      payload = matsuo::fusion_table_json(fusion_n);
    }
    if (fusion_flags.format == "table") {
      std::string text;
      auto line = [&](const Json& entry) {
        const auto& in = entry["inputs"];
        text += "(" + in[0]["r"].dump() + "," + in[0]["s"].dump() + ") x (" +
                in[1]["r"].dump() + "," + in[1]["s"].dump() + ") ->";
        for (const auto& o : entry["outputs"]) {
          text += " (" + o["r"].dump() + "," + o["s"].dump() + ")";
          if (o["mult"].get<int>() != 1) text += "x" + o["mult"].dump();
        }
        text += "\n";
      };
      if (payload.contains("table")) {
        for (const auto& entry : payload["table"]) line(entry);
      } else {
        line(payload);
      }
      write_output(text, fusion_flags.out_path);
      return;
    }
    payload["meta"] = matsuo::meta_json("fusion", config);
    write_output(dump(payload), fusion_flags.out_path);
  });

  // ---- branch -----------------------------------------------------------
  auto* branch_cmd = app.add_subcommand(
      "branch", "branching summands and σ-type weight data");
  CommonFlags branch_flags;
  int branch_n = 1;
  int branch_j = 0;
  bool branch_sigma = false;
  branch_cmd->add_option("--n", branch_n, "series index")->required();
  branch_cmd->add_option("--j", branch_j, "sector half-index (0 ≤ 2j ≤ n+1)");
  branch_cmd->add_flag("--sigma", branch_sigma,
                       "emit the weight partition instead of summands");
  add_common(branch_cmd, branch_flags);
  branch_cmd->callback([&] {
    Json config = config_common(branch_flags);
    config["n"] = branch_n;
    if (branch_sigma) {
      config["sigma"] = true;
      exit_code = emit(matsuo::sigma_json(matsuo::sigma_type_weights(branch_n)),
                       "branch", config, branch_flags);
      return;
    }
    config["j"] = branch_j;
    exit_code = emit(matsuo::branch_json(branch_n, branch_j), "branch", config,
                     branch_flags);
  });

  // ---- zhu --------------------------------------------------------------
  auto* zhu_cmd = app.add_subcommand(
      "zhu", "group-algebra quotient dimension by exact saturation");
  CommonFlags zhu_flags;
  int zhu_n = 1;
  std::size_t zhu_budget = matsuo::kDefaultZhuBudget;
  zhu_cmd->add_option("--n", zhu_n, "points minus one")->required();
  zhu_cmd->add_option("--budget", zhu_budget,
                      "group-algebra dimension budget");
  add_common(zhu_cmd, zhu_flags);
  zhu_cmd->callback([&] {
    const matsuo::QuotientReport report =
        matsuo::quotient_dimension(zhu_n, zhu_budget);
    Json config = config_common(zhu_flags);
    config["n"] = zhu_n;
    config["budget"] = zhu_budget;
    exit_code = emit(matsuo::zhu_json(report, matsuo::sector_labels(zhu_n)),
                     "zhu", config, zhu_flags);
  });

  // ---- coeffs -----------------------------------------------------------
  auto* coeffs_cmd = app.add_subcommand(
      "coeffs", "triangular exponentials and recursion coefficients");
  coeffs_cmd->require_subcommand(1);

  auto* exp_cmd = coeffs_cmd->add_subcommand(
      "exp", "exponential of the shift block as a Toeplitz sequence");
  CommonFlags exp_flags;
  int exp_m = 1;
  bool exp_negated = false;
  exp_cmd->add_option("--m", exp_m, "matrix size")->required();
  exp_cmd->add_flag("--negated", exp_negated, "exponential of the negated block");
  add_common(exp_cmd, exp_flags);
  exp_cmd->callback([&] {
    const matsuo::LowerToeplitz t = matsuo::jordan_exp(exp_m, exp_negated);
    Json config = config_common(exp_flags);
    config["m"] = exp_m;
    config["negated"] = exp_negated;
    exit_code =
        emit(matsuo::toeplitz_json(t, exp_negated), "coeffs exp", config,
             exp_flags);
  });

  auto* phalf_cmd = coeffs_cmd->add_subcommand(
      "phalf", "signed reciprocal-factorial coefficients");
  CommonFlags phalf_flags;
  int phalf_i = 0;
  int phalf_j = 0;
  phalf_cmd->add_option("--i", phalf_i, "row index")->required();
  phalf_cmd->add_option("--j", phalf_j, "power")->required();
  add_common(phalf_cmd, phalf_flags);
  phalf_cmd->callback([&] {
    const matsuo::WordPolynomial p = matsuo::p_half(phalf_i, phalf_j);
    Json config = config_common(phalf_flags);
    config["i"] = phalf_i;
    config["j"] = phalf_j;
    Json payload;
    payload["i"] = phalf_i;
    payload["j"] = phalf_j;
    payload["polynomial"] = matsuo::polynomial_json(p);
    payload["pretty"] = p.str();
    exit_code = emit(payload, "coeffs phalf", config, phalf_flags);
  });

  auto* p0_cmd = coeffs_cmd->add_subcommand(
      "p0", "recursion coefficients over the Q alphabet");
  CommonFlags p0_flags;
  int p0_n = 2;
  int p0_k = 0;
  int p0_j = 1;
  p0_cmd->add_option("--N", p0_n, "weight")->required();
  p0_cmd->add_option("--k", p0_k, "index")->required();
  p0_cmd->add_option("--j", p0_j, "degree")->required();
  add_common(p0_cmd, p0_flags);
  p0_cmd->callback([&] {
    const matsuo::WordPolynomial p = matsuo::p_zero(p0_n, p0_k, p0_j);
    Json config = config_common(p0_flags);
    config["N"] = p0_n;
    config["k"] = p0_k;
    config["j"] = p0_j;
    Json payload;
    payload["N"] = p0_n;
    payload["k"] = p0_k;
    payload["j"] = p0_j;
    payload["polynomial"] = matsuo::polynomial_json(p);
    payload["pretty"] = p.str();
    exit_code = emit(payload, "coeffs p0", config, p0_flags);
  });

  auto* verify_cmd = coeffs_cmd->add_subcommand(
      "verify", "symbolic substitution check of the recursion");
  CommonFlags verify_flags;
  int verify_n = 2;
  verify_cmd->add_option("--N", verify_n, "weight")->required();
  add_common(verify_cmd, verify_flags);
  verify_cmd->callback([&] {
    const matsuo::SubstitutionReport report =
        matsuo::verify_substitution(verify_n);
    Json config = config_common(verify_flags);
    config["N"] = verify_n;
    exit_code = emit(matsuo::substitution_json(report), "coeffs verify",
                     config, verify_flags, report.ok ? 0 : 1);
  });

  // ---- verify-all -------------------------------------------------------
  auto* verify_all = app.add_subcommand(
      "verify-all", "run the whole verification suite");
  CommonFlags verify_all_flags;
  int verify_all_rank = 12;
  verify_all->add_option("--n", verify_all_rank,
                         "cap ranked families at this rank");
  verify_all_flags.format = "table";
  add_common(verify_all, verify_all_flags, {"table", "json"});
  verify_all->callback([&] {
    const auto results = matsuo::run_acceptance(verify_all_rank);
    if (verify_all_flags.format == "json") {
      Json payload;
      Json list = Json::array();
      for (const auto& r : results) {
        Json entry;
        entry["index"] = r.index;
        entry["name"] = r.name;
        entry["passed"] = r.passed;
        entry["detail"] = r.detail;
        list.push_back(entry);
      }
      payload["criteria"] = list;
      payload["all_passed"] = matsuo::all_passed(results);
      Json config = config_common(verify_all_flags);
      config["n"] = verify_all_rank;
      payload["meta"] = matsuo::meta_json("verify-all", config);
      write_output(dump(payload), verify_all_flags.out_path);
    } else {
      write_output(matsuo::format_results(results),
                   verify_all_flags.out_path);
    }
    exit_code = matsuo::all_passed(results) ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const matsuo::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const matsuo::InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 4;
  } catch (const matsuo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
