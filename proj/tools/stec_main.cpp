#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stec/expr.hpp"
#include "stec/report.hpp"
#include "stec/suites.hpp"

namespace {

stec::Signature parse_signature(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--sig", "expected K,N (e.g. --sig 1,3)");
  int k = std::stoi(text.substr(0, comma));
  int n = std::stoi(text.substr(comma + 1));
  return stec::Signature(k, n);
}

struct VerifyOptions {
  std::string suite;
  std::string sig_text;
  std::string config_path;
  std::string scenario;
  std::string format = "table";
  std::string out_path;
  int max_dim = -1;
  int gauss = -1;
  int cases = -1;
  std::optional<std::uint64_t> seed;
};

// Precedence: command line > config file > EC_SEED (seed only) > defaults.
// The config file mirrors the flags: sig, max_dim, seed, gauss, cases,
// scenario, format, out.
stec::SuiteConfig resolve_config(VerifyOptions& opt, bool format_from_flag,
                                 bool out_from_flag) {
  stec::SuiteConfig cfg;
  nlohmann::json file;
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + opt.config_path);
    file = nlohmann::json::parse(in);
  }
  if (const char* env = std::getenv("EC_SEED")) cfg.seed = std::strtoull(env, nullptr, 10);
  if (file.contains("seed")) cfg.seed = file["seed"].get<std::uint64_t>();
  if (file.contains("max_dim")) cfg.max_dim = file["max_dim"].get<int>();
  if (file.contains("gauss")) cfg.gauss = file["gauss"].get<int>();
  if (file.contains("cases")) cfg.cases = file["cases"].get<int>();
  if (file.contains("scenario")) cfg.scenario_path = file["scenario"].get<std::string>();
  if (file.contains("sig")) cfg.sig = parse_signature(file["sig"].get<std::string>());
  if (!format_from_flag && file.contains("format")) {
    opt.format = file["format"].get<std::string>();
    if (opt.format != "json" && opt.format != "table")
      throw CLI::ValidationError("--config", "format must be json or table");
  }
  if (!out_from_flag && file.contains("out")) opt.out_path = file["out"].get<std::string>();

  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.max_dim >= 0) cfg.max_dim = opt.max_dim;
  if (opt.gauss >= 0) cfg.gauss = opt.gauss;
  if (opt.cases >= 0) cfg.cases = opt.cases;
  if (!opt.scenario.empty()) cfg.scenario_path = opt.scenario;
  if (!opt.sig_text.empty()) cfg.sig = parse_signature(opt.sig_text);
  return cfg;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"space-time exterior calculus: multivector algebra, oriented integrals, and "
               "verification suites"};
  app.set_version_flag("--version", stec::tool_version);
  app.require_subcommand(1);

  // eval
  std::string eval_sig = "1,3";
  std::string eval_expr;
  std::string eval_format = "text";
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a multivector expression");
  eval_cmd->add_option("--sig", eval_sig, "session signature K,N")->capture_default_str();
  eval_cmd->add_option("--format", eval_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  eval_cmd->add_option("expr", eval_expr, "expression, e.g. \"e0 ^ e1\"")->required();

  // verify
  VerifyOptions vopt;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", vopt.suite, "algebra|derivatives|stokes|maxwell")->required();
  verify_cmd->add_option("--sig", vopt.sig_text, "restrict to one signature K,N");
  verify_cmd->add_option("--max-dim", vopt.max_dim, "exhaustive dimension bound (algebra)");
  std::uint64_t seed_value = 0;
  CLI::Option* seed_opt = verify_cmd->add_option("--seed", seed_value, "deterministic seed");
  verify_cmd->add_option("--gauss", vopt.gauss, "Gauss-Legendre order");
  verify_cmd->add_option("--cases", vopt.cases, "random cases per family");
  verify_cmd->add_option("--scenario", vopt.scenario, "scenario JSON (maxwell)");
  verify_cmd->add_option("--config", vopt.config_path, "JSON config mirroring the flags");
  CLI::Option* format_opt = verify_cmd->add_option("--format", vopt.format, "json|table")
                                ->check(CLI::IsMember({"json", "table"}));
  CLI::Option* out_opt = verify_cmd->add_option("--out", vopt.out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eval_cmd) {
      stec::Signature sig = parse_signature(eval_sig);
      stec::Multivector<stec::Rational> result = stec::eval(eval_expr, sig);
      if (eval_format == "json") {
        std::cout << "{\"expr\": \"" << eval_expr << "\", \"signature\": [" << sig.time_dims
                  << ", " << sig.space_dims << "], \"result\": \"" << to_string(result)
                  << "\"}\n";
      } else {
        std::cout << to_string(result) << "\n";
      }
      return 0;
    }

    if (*verify_cmd) {
      if (*seed_opt) vopt.seed = seed_value;
      stec::SuiteConfig cfg = resolve_config(vopt, format_opt->count() > 0, out_opt->count() > 0);
      stec::Report rep = stec::run_suite(vopt.suite, cfg);
      int rc = emit(vopt.format == "json" ? to_json(rep) : to_table(rep), vopt.out_path);
      if (rc != 0) return rc;
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const stec::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
