#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vcli/suites.hpp"

namespace {

struct RunOptions {
  std::vector<std::string> suites;
  vcli::SuiteParams params;
  uint64_t seed = 0;
  std::string json_path;
};

int run_command(const RunOptions& opt) {
  std::vector<vcli::SuiteReport> reports;
  for (const std::string& name : opt.suites) {
    reports.push_back(vcli::run_suite(name, opt.params, opt.seed));
  }
  for (const vcli::SuiteReport& r : reports) {
    std::cout << vcli::emit_report(r, "text");
  }
  if (!opt.json_path.empty()) {
    nlohmann::ordered_json out;
    if (reports.size() == 1) {
      out = vcli::report_json(reports.front());
    } else {
      out = nlohmann::ordered_json::array();
      for (const vcli::SuiteReport& r : reports) {
        out.push_back(vcli::report_json(r));
      }
    }
    std::ofstream f(opt.json_path);
    if (!f) {
      std::cerr << "cannot open " << opt.json_path << " for writing\n";
      return 2;
    }
    f << out.dump(2) << "\n";
  }
  for (const vcli::SuiteReport& r : reports) {
    if (!r.all_passed()) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic checks for the torsion automorphism artifact"};
  app.require_subcommand(1);

  CLI::App* list = app.add_subcommand("list", "print the available suite names");

  CLI::App* run = app.add_subcommand("run", "run one suite or all of them");
  std::string suite;
  bool all = false;
  RunOptions opt;
  std::optional<int64_t> opt_p, opt_N, opt_ell;
  std::optional<int> opt_cases;
  run->add_option("--suite", suite, "suite name from the list subcommand");
  run->add_flag("--all", all, "run every suite in listed order");
  run->add_option("--p", opt_p, "restrict to one coefficient characteristic");
  run->add_option("--N", opt_N, "cap the residue level N");
  run->add_option("--ell", opt_ell, "restrict to one torsion level l");
  run->add_option("--cases", opt_cases, "randomized instances per property case");
  run->add_option("--seed", opt.seed, "master seed for the per-case generators");
  run->add_option("--json", opt.json_path, "write the JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list->parsed()) {
    for (const std::string& name : vcli::suite_names()) {
      std::cout << name << "\n";
    }
    return 0;
  }

  if (all == !suite.empty()) {
    std::cerr << "pass exactly one of --suite <name> or --all\n";
    return 2;
  }
  opt.params.p = opt_p;
  opt.params.level_cap = opt_N;
  opt.params.ell = opt_ell;
  opt.params.instances = opt_cases;
  opt.suites = all ? vcli::suite_names() : std::vector<std::string>{suite};

  try {
    return run_command(opt);
  } catch (const vcli::UnknownSuite& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const vcli::BadParameters& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
