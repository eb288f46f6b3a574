// umbral-verify: exact recomputation of umbral moonshine trace-function
// products, comparison against their closed eta/theta forms, mock-form
// extraction, and character-integrality checks, from the embedded exact
// data tables.  Exit codes: 0 all checks pass, 1 any check fails, 2 usage.

#include <CLI11.hpp>

#include <umbral/driver.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

umbral::Rational parse_rational_flag(const std::string& text, const char* flag) {
  try {
    return umbral::parse_rational(text);
  } catch (const std::exception&) {
    throw umbral::usage_error(std::string(flag) + " expects a rational like \"8\" or \"25/24\", got \"" +
                              text + "\"");
  }
}

umbral::JobConfig::Perturbation parse_perturbation(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ':')) parts.push_back(item);
  if (parts.size() != 4)
    throw umbral::usage_error("--perturb expects lambency:class:q:y, got \"" + text + "\"");
  umbral::JobConfig::Perturbation p;
  try {
    p.lambency = std::stoi(parts[0]);
  } catch (const std::exception&) {
    throw umbral::usage_error("--perturb lambency must be an integer, got \"" + parts[0] + "\"");
  }
  p.cls = parts[1];
  p.q_exp = parse_rational_flag(parts[2], "--perturb");
  p.y_exp = parse_rational_flag(parts[3], "--perturb");
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of umbral moonshine trace-function identities"};
  app.require_subcommand(1);

  auto* verify =
      app.add_subcommand("verify", "recompute trace products and run the selected checks");
  std::vector<int> lambencies;
  std::vector<std::string> classes;
  std::string qmax_text, yfloor_text, ycap_text;
  std::vector<std::string> check_names;
  bool emit_json = false;
  int jobs = 1;
  long coefficients = 5;
  std::string perturb_text;
  verify->add_option("--lambency", lambencies, "lambencies to verify (default: 4 5 7 13)")
      ->delimiter(',');
  verify->add_option("--class", classes, "restrict to these conjugacy class labels")
      ->delimiter(',');
  verify->add_option("--qmax", qmax_text, "q-exponent ceiling, a rational such as 10 or 25/24");
  verify->add_option("--yfloor", yfloor_text, "y-exponent floor, a rational");
  verify->add_option("--ycap", ycap_text,
                     "y-exponent cap for the equality comparison (default 9)");
  verify
      ->add_option("--check", check_names,
                   "checks to run: equality, mock, characters, blocks (default: equality)")
      ->delimiter(',');
  verify->add_flag("--json", emit_json, "emit a JSON report instead of plain-text tables");
  verify->add_option("--jobs", jobs, "number of worker threads (default 1)");
  verify->add_option("--coefficients", coefficients,
                     "q-orders per residue for the mock and characters checks (default 5)");
  verify
      ->add_option("--perturb", perturb_text,
                   "testing hook: lambency:class:q:y adds 1 to that product coefficient")
      ->group("");

  auto* dump = app.add_subcommand("dump-tables", "re-emit the embedded data tables verbatim");
  int dump_lambency = 0;
  CLI::Option* dump_l =
      dump->add_option("--lambency", dump_lambency, "dump only this lambency's tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dump->parsed()) {
      std::optional<int> m;
      if (*dump_l) m = dump_lambency;
      std::cout << umbral::dump_tables(m);
      return 0;
    }

    umbral::JobConfig cfg;
    if (!lambencies.empty()) cfg.lambencies = lambencies;
    cfg.classes = classes;
    if (!qmax_text.empty()) cfg.q_max = parse_rational_flag(qmax_text, "--qmax");
    if (!yfloor_text.empty()) cfg.y_floor = parse_rational_flag(yfloor_text, "--yfloor");
    if (!ycap_text.empty()) cfg.y_cap = parse_rational_flag(ycap_text, "--ycap");
    if (!check_names.empty()) {
      cfg.checks.clear();
      for (const std::string& name : check_names) cfg.checks.insert(umbral::check_from_name(name));
    }
    cfg.json = emit_json;
    cfg.jobs = jobs;
    cfg.coefficient_count = coefficients;
    if (!perturb_text.empty()) cfg.perturb = parse_perturbation(perturb_text);

    const umbral::RunReport report = umbral::run(cfg);
    if (cfg.json) {
      std::cout << umbral::render_json(report, cfg).dump(2) << "\n";
    } else {
      std::cout << umbral::render_table(report, cfg);
      std::cerr << "elapsed: " << report.elapsed_ms << " ms\n";
    }
    return report.passed() ? 0 : 1;
  } catch (const umbral::usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
