#include <sstream>

#include "json.hpp"

#include "integdistill/report.hpp"

namespace integdistill {

using ordered_json = nlohmann::ordered_json;

std::string render_paths_text(std::span<const TestPath> paths) {
  std::ostringstream out;
  bool in_constructors = false;
  for (const auto& path : paths) {
    if (path.nodes.empty()) continue;
    if (path.kind == PathKind::constructor) {
      if (!in_constructors) {
        out << "************* Constructors **********\n";
        in_constructors = true;
      }
      out << "Test Path Number: " << path.id << "\n";
      for (const MethodInfo* m : path.nodes) out << '\t' << m->owner << ": " << m->signature << "\n";
      continue;
    }
    out << "Test Path Number: " << path.id << " ----- Path Length:" << path.length() << "\n";
    for (const MethodInfo* m : path.nodes) out << '\t' << m->owner << ':' << m->signature << "\n";
  }
  return out.str();
}

std::string render_defuse_log(std::span<const DefUseEdge> edges) {
  std::ostringstream out;
  for (const auto& e : edges) {
    out << "From " << e.from->name << " due to used variable:" << e.field << " --> "
        << e.to->name << " which defines this variable.\n";
  }
  return out.str();
}

std::string render_invocations(std::span<const InvocationPoint> points,
                               const InvocationSummary& summary) {
  std::ostringstream out;
  const std::string indent(7, ' ');
  out << "---- Invocations---\n";
  for (const auto& p : points) {
    out << indent << "*Invocation Point Detected at Line:" << p.line << "*\n";
    out << indent << p.call_text << "\n";
    out << indent << "Invocation Class:" << p.target_class;
    if (!p.user_defined) out << "      Not a user-defined class!";
    out << "\n";
    out << indent << "Current Class:" << p.enclosing_class << " - In method:" << p.enclosing_method
        << "\n";
    out << indent << "Class object instance on which invocation detected:" << p.receiver << "\n";
  }
  out << "---- End of Invocation analysis----\n";
  for (const auto& c : summary.classes) {
    out << "Number of invocation points in class " << c.class_name << ": " << c.total
        << " -- out of which " << c.user_defined << " are User-Defined\n";
    // Constructors are listed only when they contain calls.
    for (const auto& m : c.constructors) {
      if (m.total == 0) continue;
      out << "  Number of invocation points in constructor " << m.signature << " is " << m.total
          << "; out of which " << m.user_defined << " are User-Defined\n";
    }
    for (const auto& m : c.methods) {
      out << "  Number of invocation points in method " << m.name << " is " << m.total
          << "; out of which " << m.user_defined << " are User-Defined\n";
    }
  }
  return out.str();
}

std::string render_metrics(std::span<const ClassMetrics> metrics, const UsageStats& usage) {
  std::ostringstream out;
  for (const auto& m : metrics) {
    const std::string& c = m.class_name;
    out << "-----\n";
    out << "Class " << c << "\n";
    out << "  Number of methods in Class " << c << ": " << m.method_count << "\n";
    out << "  Number of constructors in Class " << c << ": " << m.constructor_count << "\n";
    out << "  Maximum number of parameters among methods of class " << c << ": " << m.max_params
        << "\n";
    out << "  Coupling Degree of Class " << c << ": " << m.coupling_degree << "\n";
    out << "  Bases of class " << c << ":";
    for (std::size_t i = 0; i < m.base_names.size(); ++i) {
      out << (i == 0 ? " " : ", ") << m.base_names[i];
    }
    out << "\n";
    out << "  Number of base types of class " << c << ": " << m.base_count << "\n";
  }
  if (const ClassUsage* top = usage.most_used_class()) {
    out << "-----\n";
    out << "Most used class: " << top->class_name << "\n";
    out << "  " << top->times_as_method_parameter << " times as method parameter\n";
    out << "  " << top->times_as_variable_type << " times as variable type inside methods\n";
  }
  return out.str();
}

std::string render_timings(const AnalysisReport& report) {
  std::ostringstream out;
  out << "Phase timings (ms)\n";
  for (const auto& t : report.timings) out << "  " << t.phase << ": " << t.milliseconds << "\n";
  out << "  total: " << report.total_ms << "\n";
  return out.str();
}

std::string render_report(const AnalysisReport& report, const ReportSelection& selection) {
  std::vector<std::string> sections;
  if (selection.paths) sections.push_back(render_paths_text(report.paths));
  if (selection.defuse) sections.push_back(render_defuse_log(report.defuse_edges));
  if (selection.invocations) sections.push_back(render_invocations(report.points, report.summary));
  if (selection.metrics) sections.push_back(render_metrics(report.metrics, report.usage));
  std::string out;
  for (std::size_t i = 0; i < sections.size(); ++i) {
    if (i > 0) out += "\n";
    out += sections[i];
  }
  return out;
}

namespace {

ordered_json counts_json(const MethodInvocationCount& m) {
  ordered_json j;
  j["name"] = m.name;
  j["signature"] = m.signature;
  j["total"] = m.total;
  j["user_defined"] = m.user_defined;
  return j;
}

ordered_json path_json(const TestPath& path, const AnalysisReport& report) {
  ordered_json j;
  j["id"] = path.id;
  j["kind"] = path.kind == PathKind::method ? "method" : "constructor";
  j["class"] = path.nodes.empty() ? std::string() : path.nodes.front()->owner;
  j["nodes"] = ordered_json::array();
  for (const MethodInfo* m : path.nodes) j["nodes"].push_back(m->signature);
  j["length"] = path.length();
  bool self = false;
  const auto& pool =
      path.kind == PathKind::method ? report.coupling_methods : report.coupling_constructors;
  for (const auto& c : pool) {
    if (!path.nodes.empty() && c.method == path.nodes.front()) self = c.self_coupling;
  }
  j["self_coupling"] = self;
  try {
    ordered_json steps = ordered_json::array();
    for (const auto& step : execution_order(path, *report.model)) steps.push_back(step.text);
    j["execution_order"] = std::move(steps);
  } catch (const UnconstructibleDependency& e) {
    j["execution_order"] = nullptr;
    j["unconstructible"] = e.message();
  }
  return j;
}

}  // namespace

std::string export_json(const AnalysisReport& report) {
  ordered_json doc;

  doc["paths"] = ordered_json::array();
  for (const auto& p : report.paths) doc["paths"].push_back(path_json(p, report));

  doc["defuse_edges"] = ordered_json::array();
  for (const auto& e : report.defuse_edges) {
    ordered_json j;
    j["class"] = e.from->owner;
    j["from"] = e.from->name;
    j["field"] = e.field;
    j["to"] = e.to->name;
    doc["defuse_edges"].push_back(std::move(j));
  }

  ordered_json inv;
  inv["points"] = ordered_json::array();
  for (const auto& p : report.points) {
    ordered_json j;
    j["file"] = p.file;
    j["line"] = p.line;
    j["column"] = p.column;
    j["call"] = p.call_text;
    j["target_class"] = p.target_class;
    j["user_defined"] = p.user_defined;
    j["builtin"] = p.builtin;
    j["class"] = p.enclosing_class;
    j["method"] = p.enclosing_method;
    j["constructor"] = p.in_constructor;
    j["receiver"] = p.receiver;
    inv["points"].push_back(std::move(j));
  }
  inv["summary"] = ordered_json::array();
  for (const auto& c : report.summary.classes) {
    ordered_json j;
    j["class"] = c.class_name;
    j["total"] = c.total;
    j["user_defined"] = c.user_defined;
    j["constructors"] = ordered_json::array();
    for (const auto& m : c.constructors) j["constructors"].push_back(counts_json(m));
    j["methods"] = ordered_json::array();
    for (const auto& m : c.methods) j["methods"].push_back(counts_json(m));
    inv["summary"].push_back(std::move(j));
  }
  doc["invocations"] = std::move(inv);

  doc["metrics"] = ordered_json::array();
  for (const auto& m : report.metrics) {
    ordered_json j;
    j["class"] = m.class_name;
    j["methods"] = m.method_count;
    j["constructors"] = m.constructor_count;
    j["max_params"] = m.max_params;
    j["coupling_degree"] = m.coupling_degree;
    j["bases"] = m.base_names;
    j["base_count"] = m.base_count;
    doc["metrics"].push_back(std::move(j));
  }

  ordered_json usage;
  usage["classes"] = ordered_json::array();
  for (const auto& u : report.usage.per_class) {
    ordered_json j;
    j["class"] = u.class_name;
    j["times_as_method_parameter"] = u.times_as_method_parameter;
    j["times_as_variable_type"] = u.times_as_variable_type;
    usage["classes"].push_back(std::move(j));
  }
  if (const ClassUsage* top = report.usage.most_used_class()) {
    usage["most_used"] = top->class_name;
  } else {
    usage["most_used"] = nullptr;
  }
  doc["usage"] = std::move(usage);

  ordered_json timings;
  timings["phases"] = ordered_json::object();
  for (const auto& t : report.timings) timings["phases"][t.phase] = t.milliseconds;
  timings["total_ms"] = report.total_ms;
  doc["timings"] = std::move(timings);

  return doc.dump(2) + "\n";
}

}  // namespace integdistill
