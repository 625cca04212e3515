#pragma once

#include <array>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "integdistill/coupling.hpp"
#include "integdistill/instrument.hpp"
#include "integdistill/invocations.hpp"
#include "integdistill/pathgen.hpp"
#include "integdistill/semantic.hpp"

namespace integdistill {

enum class InstrumentMode { off, add, strip };

struct ReportSelection {
  bool paths = false;
  bool defuse = false;
  bool invocations = false;
  bool metrics = false;

  bool any() const { return paths || defuse || invocations || metrics; }
  static ReportSelection all() { return {true, true, true, true}; }
};

struct RunConfig {
  std::vector<std::string> inputs;  // files or directories (searched for *.moo)
  ReportSelection reports = ReportSelection::all();
  InstrumentMode instrumentation = InstrumentMode::off;
  bool in_place = false;
  std::optional<std::filesystem::path> output_dir;
  std::optional<std::filesystem::path> json_path;  // "-" means stdout
  BuiltinClasses builtin_classes = default_builtin_classes();
  ProbeTemplate probe = ProbeTemplate::timing();
};

/// Thrown for unusable configurations; maps to exit code 4.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads `key = value` lines ('#' starts a comment) into `config`:
///   builtin_classes = A, B      (added to the current list)
///   probe_before = <line>       (repeatable; first occurrence replaces the default)
///   probe_after  = <line>       (same)
void load_config_file(const std::filesystem::path& file, RunConfig& config);

/// Phases in execution order, matching the keys of the JSON `timings.phases`.
inline constexpr std::array<std::string_view, 8> kPhaseNames = {
    "parse",
    "model",
    "finding_coupling_methods",
    "integration_and_coupling_analytics",
    "test_case_generation",
    "invocation_analysis",
    "invocation_analysis_per_class",
    "code_instrumentation",
};

struct PhaseTiming {
  std::string phase;
  double milliseconds = 0.0;
};

struct InstrumentedFile {
  std::string source_path;
  std::filesystem::path output_path;
  std::vector<Probe> probes;
};

struct AnalysisReport {
  std::shared_ptr<const ProgramModel> model;
  std::vector<CouplingMethod> coupling_methods;
  std::vector<CouplingMethod> coupling_constructors;
  std::vector<PathTree> trees;
  std::vector<TestPath> paths;
  std::vector<DefUseEdge> defuse_edges;
  std::vector<InvocationPoint> points;
  InvocationSummary summary;
  std::vector<ClassMetrics> metrics;
  UsageStats usage;
  std::vector<InstrumentedFile> instrumented;
  std::vector<PhaseTiming> timings;
  double total_ms = 0.0;
};

/// Runs every analysis phase over already-loaded sources.
/// Throws LexError/ParseError/SemanticError.
AnalysisReport analyze(std::span<const std::pair<std::string, std::string>> sources,
                       const BuiltinClasses& builtins = default_builtin_classes());

struct RunResult {
  int exit_code = 0;
  std::string error;  // "file:line: message" when exit_code != 0
  std::optional<AnalysisReport> report;
  std::string text;  // selected text sections
  std::string json;  // set when a JSON path was requested
};

/// Exit codes: 0 ok, 1 lex/parse error, 2 semantic error, 3 I/O error,
/// 4 invalid configuration, 5 instrumentation error.
RunResult run(const RunConfig& config);

std::string render_paths_text(std::span<const TestPath> paths);
std::string render_defuse_log(std::span<const DefUseEdge> edges);
std::string render_invocations(std::span<const InvocationPoint> points,
                               const InvocationSummary& summary);
std::string render_metrics(std::span<const ClassMetrics> metrics, const UsageStats& usage);
std::string render_timings(const AnalysisReport& report);
std::string render_report(const AnalysisReport& report, const ReportSelection& selection);

std::string export_json(const AnalysisReport& report);

}  // namespace integdistill
