// Command line front end for the scenario catalog.

#include "thhcalc/errors.hpp"
#include "thhcalc/report.hpp"
#include "thhcalc/scenarios.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kUsage = 2;

struct Options {
  std::uint32_t prime = 3;
  std::optional<int> cap;
  std::string format = "text";
  std::string out;
  std::string scenario;
  std::string scenario_file;
  bool all = false;
};

void add_run_options(CLI::App& app, Options& o) {
  app.add_option("--prime,-p", o.prime, "Odd prime")->check(CLI::Range(3u, 1000u));
  app.add_option("--cap,-c", o.cap, "Total degree cap (default 2p^2 + 4p)")->check(CLI::NonNegativeNumber);
  app.add_option("--format,-f", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out,-o", o.out, "Write the report to a file");
}

int emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) {
    std::cerr << "cannot write " << out << "\n";
    return kUsage;
  }
  file << text;
  return 0;
}

int run(const Options& o) {
  using namespace thhcalc;
  const Format format = format_from_string(o.format);
  std::vector<Report> reports;
  if (o.all) {
    reports = run_all(o.prime, o.cap);
  } else if (!o.scenario_file.empty()) {
    std::ifstream in(o.scenario_file);
    if (!in) {
      std::cerr << "cannot read " << o.scenario_file << "\n";
      return kUsage;
    }
    std::stringstream text;
    text << in.rdbuf();
    reports.push_back(run_scenario_file(text.str(), std::nullopt, o.cap));
  } else if (!o.scenario.empty()) {
    reports.push_back(run_scenario(o.scenario, o.prime, o.cap));
  } else {
    std::cerr << "nothing to run: give a scenario, --scenario-file or --all\n";
    return kUsage;
  }
  const std::string text = reports.size() == 1 ? emit_report(reports.front(), format) : emit_reports(reports, format);
  if (const int rc = emit(text, o.out)) return rc;
  for (const auto& r : reports)
    if (!r.passed()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectral sequence computations for topological Hochschild homology"};
  app.require_subcommand(0, 1);
  Options top;
  add_run_options(app, top);
  app.add_flag("--all", top.all, "Run the whole catalog");

  Options sub;
  CLI::App* run_cmd = app.add_subcommand("run", "Run one scenario");
  run_cmd->add_option("scenario", sub.scenario, "Catalog scenario name");
  run_cmd->add_option("--scenario-file", sub.scenario_file, "Scenario in the structured text schema")
      ->check(CLI::ExistingFile);
  run_cmd->add_flag("--all", sub.all, "Run the whole catalog");
  add_run_options(*run_cmd, sub);

  CLI::App* list_cmd = app.add_subcommand("list", "List the catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*list_cmd) {
      for (const auto& s : thhcalc::scenario_catalog())
        std::cout << s.name << "\n    " << s.title << "\n    checks: " << s.summary << "\n";
      return 0;
    }
    if (*run_cmd) return run(sub);
    if (top.all) return run(top);
    std::cerr << app.help();
    return kUsage;
  } catch (const thhcalc::Error& e) {
    std::cerr << e.what() << "\n";
    const auto c = e.code();
    return c == thhcalc::ErrorCode::UnknownScenario || c == thhcalc::ErrorCode::ParseError ||
                   c == thhcalc::ErrorCode::InvalidPrime
               ? kUsage
               : 1;
  }
}
