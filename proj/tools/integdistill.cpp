// integdistill: coupling-based integration analysis for MiniOO sources.

#include <iostream>

#include <CLI11.hpp>

#include "integdistill/report.hpp"

int main(int argc, char** argv) {
  using namespace integdistill;

  CLI::App app{"Integration test path generation, invocation analysis and instrumentation"};
  app.set_version_flag("--version", "integdistill 1.0.0");

  RunConfig config;
  config.reports = {};
  std::string json_path;
  std::string out_dir;
  std::string config_file;
  bool all = false;
  bool add_probes = false;
  bool strip_probes = false;
  bool show_timings = false;

  app.add_option("inputs", config.inputs, "MiniOO source files or directories")->required();
  app.add_flag("--paths", config.reports.paths, "Print generated test paths");
  app.add_flag("--defuse", config.reports.defuse, "Print the def-use analysis log");
  app.add_flag("--invocations", config.reports.invocations, "Print invocation point analysis");
  app.add_flag("--metrics", config.reports.metrics, "Print code metrics and analytics");
  app.add_flag("--all", all, "Print every report (default when none is selected)");
  app.add_option("--json", json_path, "Write the JSON report to FILE ('-' for stdout)");
  app.add_option("--out", out_dir, "Directory for report.txt and rewritten sources");
  auto* add = app.add_flag("--instrument", add_probes, "Wrap invocation points with timing probes");
  auto* rm = app.add_flag("--strip", strip_probes, "Remove previously injected probes");
  add->excludes(rm);
  app.add_flag("--in-place", config.in_place, "Rewrite inputs instead of writing new files");
  app.add_option("--config", config_file, "key=value configuration file");
  app.add_flag("--timings", show_timings, "Print phase timings to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  if (all) config.reports = ReportSelection::all();
  if (!config.reports.any()) config.reports = ReportSelection::all();
  if (add_probes) config.instrumentation = InstrumentMode::add;
  if (strip_probes) config.instrumentation = InstrumentMode::strip;
  if (!json_path.empty()) config.json_path = json_path;
  if (!out_dir.empty()) config.output_dir = out_dir;
  if (!config_file.empty()) {
    try {
      load_config_file(config_file, config);
    } catch (const ConfigError& e) {
      std::cerr << "integdistill: " << e.what() << "\n";
      return 4;
    }
  }

  RunResult result = run(config);
  if (result.exit_code != 0) {
    std::cerr << "integdistill: " << result.error << "\n";
    return result.exit_code;
  }
  if (!config.output_dir) std::cout << result.text;
  if (config.json_path && *config.json_path == "-") std::cout << result.json;
  if (show_timings) std::cerr << render_timings(*result.report);
  return 0;
}
