#include <algorithm>
#include <chrono>
#include <fstream>
#include <iterator>
#include <sstream>

#include "integdistill/parser.hpp"
#include "integdistill/report.hpp"

namespace integdistill {

namespace fs = std::filesystem;

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(Clock::now()) {}
  double lap_ms() {
    auto now = Clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string() + ": cannot open file");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError(path.string() + ": read failed");
  return text;
}

void write_file(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string() + ": cannot write file");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError(path.string() + ": write failed");
}

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& input : inputs) {
    fs::path p(input);
    std::error_code ec;
    if (!fs::exists(p, ec)) throw IoError(input + ": no such file or directory");
    if (fs::is_directory(p, ec)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::recursive_directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".moo") {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(p);
    }
  }
  return files;
}

fs::path derived_path(const fs::path& input, const std::optional<fs::path>& out_dir,
                      std::string_view suffix) {
  fs::path name = input.stem();
  name += suffix;
  name += ".moo";
  return out_dir ? *out_dir / name : input.parent_path() / name;
}

}  // namespace

void load_config_file(const fs::path& file, RunConfig& config) {
  std::ifstream in(file);
  if (!in) throw ConfigError(file.string() + ": cannot open config file");
  bool before_seen = false;
  bool after_seen = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(file.string() + ":" + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "builtin_classes") {
      std::stringstream names(value);
      std::string name;
      while (std::getline(names, name, ',')) {
        name = trim(name);
        if (!name.empty()) config.builtin_classes.insert(name);
      }
    } else if (key == "probe_before") {
      if (!before_seen) config.probe.before.clear();
      before_seen = true;
      config.probe.before.push_back(value);
    } else if (key == "probe_after") {
      if (!after_seen) config.probe.after.clear();
      after_seen = true;
      config.probe.after.push_back(value);
    } else {
      throw ConfigError(file.string() + ":" + std::to_string(line_no) + ": unknown key '" + key +
                        "'");
    }
  }
}

AnalysisReport analyze(std::span<const std::pair<std::string, std::string>> sources,
                       const BuiltinClasses& builtins) {
  AnalysisReport report;
  Stopwatch total;
  Stopwatch phase;
  auto mark = [&](std::string_view name) {
    report.timings.push_back({std::string(name), phase.lap_ms()});
  };

  std::vector<SyntaxTree> trees;
  trees.reserve(sources.size());
  for (const auto& [path, text] : sources) trees.push_back(parse(text, path));
  mark("parse");

  auto model = std::make_shared<ProgramModel>(build_model(trees));
  report.model = model;
  mark("model");

  report.coupling_methods = find_coupling_methods(*model);
  report.coupling_constructors = find_coupling_constructors(*model);
  mark("finding_coupling_methods");

  for (const ClassInfo* cls : model->ordered()) report.metrics.push_back(class_metrics(*model, *cls));
  report.usage = usage_stats(*model);
  mark("integration_and_coupling_analytics");

  for (const auto& c : report.coupling_methods) {
    TreeBuild built = build_tree(c, *model);
    report.trees.push_back(std::move(built.tree));
    report.defuse_edges.insert(report.defuse_edges.end(), built.edges.begin(), built.edges.end());
  }
  report.paths = enumerate_paths(report.trees, report.coupling_constructors);
  mark("test_case_generation");

  report.points = find_invocation_points(*model, builtins);
  mark("invocation_analysis");

  report.summary = summarize(report.points, *model);
  mark("invocation_analysis_per_class");

  report.timings.push_back({"code_instrumentation", 0.0});
  report.total_ms = total.lap_ms();
  return report;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  auto fail = [&](int code, std::string message) {
    result.exit_code = code;
    result.error = std::move(message);
    result.report.reset();
    return result;
  };

  Stopwatch total;
  std::vector<fs::path> files;
  std::vector<std::pair<std::string, std::string>> sources;
  try {
    if (config.inputs.empty()) return fail(4, "no input files given");
    if (config.in_place && config.instrumentation == InstrumentMode::off) {
      return fail(4, "--in-place requires --instrument or --strip");
    }
    files = expand_inputs(config.inputs);
    if (files.empty()) return fail(4, "no .moo files found in the given inputs");
    for (const auto& f : files) sources.emplace_back(f.string(), read_file(f));
    if (config.output_dir) fs::create_directories(*config.output_dir);

    if (config.instrumentation == InstrumentMode::strip) {
      for (std::size_t i = 0; i < files.size(); ++i) {
        sources[i].second = strip(sources[i].second);
        fs::path target =
            config.in_place ? files[i] : derived_path(files[i], config.output_dir, ".stripped");
        write_file(target, sources[i].second);
      }
    }
  } catch (const IoError& e) {
    return fail(3, e.what());
  } catch (const fs::filesystem_error& e) {
    return fail(3, e.what());
  }

  try {
    result.report = analyze(sources, config.builtin_classes);
  } catch (const LexError& e) {
    return fail(1, e.what());
  } catch (const ParseError& e) {
    return fail(1, e.what());
  } catch (const SemanticError& e) {
    return fail(2, e.what());
  }
  AnalysisReport& report = *result.report;

  try {
    if (config.instrumentation == InstrumentMode::add) {
      Stopwatch phase;
      for (std::size_t i = 0; i < files.size(); ++i) {
        const auto& [path, text] = sources[i];
        InstrumentationResult r = instrument(text, report.points, config.probe, path);
        fs::path target =
            config.in_place ? files[i] : derived_path(files[i], config.output_dir, ".instrumented");
        write_file(target, r.text);
        report.instrumented.push_back({path, target, std::move(r.probes)});
      }
      report.timings.back().milliseconds = phase.lap_ms();
    }

    result.text = render_report(report, config.reports.any() ? config.reports
                                                             : ReportSelection::all());
    if (config.output_dir) write_file(*config.output_dir / "report.txt", result.text);

    report.total_ms = total.lap_ms();
    if (config.json_path) {
      result.json = export_json(report);
      if (*config.json_path != "-") write_file(*config.json_path, result.json);
    }
  } catch (const InstrumentError& e) {
    return fail(5, e.what());
  } catch (const ParseError& e) {
    return fail(5, e.what());
  } catch (const IoError& e) {
    return fail(3, e.what());
  } catch (const fs::filesystem_error& e) {
    return fail(3, e.what());
  }
  return result;
}

}  // namespace integdistill
