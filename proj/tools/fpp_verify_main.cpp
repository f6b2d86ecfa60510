// fpp-verify: exact-arithmetic certificate runner for the cover
// construction. See README.md for the exit-code contract.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fpp/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic verification of the cover-construction claims"};
  app.require_subcommand(1);

  fpp::RunOptions opts;
  std::string case_name = "all";
  std::string config_dir;
  std::string report_path;

  CLI::App* run = app.add_subcommand("run", "execute the claim registry and emit a report");
  run->add_option("--case", case_name, "which incidence case to verify: I, II, or all")
      ->check(CLI::IsMember({"I", "II", "all"}));
  run->add_option("--config", config_dir,
                  "directory with surface_y.json / surface_x_case1.json / surface_x_case2.json "
                  "(default: built-in data)");
  run->add_option("--report", report_path, "write the report to this path (default: stdout)");
  run->add_option("--format", opts.format, "report format: json or md");
  run->add_flag("--verbose", opts.verbose, "debug logging (same as FPP_VERIFY_LOG=debug)");

  CLI11_PARSE(app, argc, argv);

  if (case_name == "I") opts.selector = fpp::CaseSelector::I;
  if (case_name == "II") opts.selector = fpp::CaseSelector::II;
  if (case_name == "all") opts.selector = fpp::CaseSelector::All;
  if (!config_dir.empty()) opts.config_dir = config_dir;
  if (!report_path.empty()) opts.report_path = report_path;

  return fpp::run_verification(opts);
}
