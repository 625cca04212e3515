#include <algorithm>
#include <set>

#include "integdistill/coupling.hpp"

namespace integdistill {

namespace {

std::optional<CouplingMethod> as_coupling(const MethodInfo& method, const ProgramModel& model) {
  CouplingMethod out;
  out.method = &method;
  for (const auto& p : method.params) {
    if (!is_user_defined(p.type_name, model)) continue;
    out.coupling_params.push_back(p);
    if (p.type_name == method.owner) out.self_coupling = true;
  }
  if (out.coupling_params.empty()) return std::nullopt;
  return out;
}

}  // namespace

const ClassUsage* UsageStats::find(std::string_view name) const {
  for (const auto& u : per_class) {
    if (u.class_name == name) return &u;
  }
  return nullptr;
}

std::vector<CouplingMethod> find_coupling_methods(const ProgramModel& model) {
  std::vector<CouplingMethod> out;
  for (const ClassInfo* cls : model.ordered()) {
    for (const auto& m : cls->methods) {
      if (auto c = as_coupling(m, model)) out.push_back(std::move(*c));
    }
  }
  return out;
}

std::vector<CouplingMethod> find_coupling_constructors(const ProgramModel& model) {
  std::vector<CouplingMethod> out;
  for (const ClassInfo* cls : model.ordered()) {
    for (const auto& m : cls->constructors) {
      if (auto c = as_coupling(m, model)) out.push_back(std::move(*c));
    }
  }
  return out;
}

ClassMetrics class_metrics(const ProgramModel& model, const ClassInfo& cls) {
  ClassMetrics out;
  out.class_name = cls.name;
  out.method_count = static_cast<int>(cls.methods.size());
  out.constructor_count = static_cast<int>(cls.constructors.size());
  std::set<std::string> dependencies;
  auto scan = [&](const std::vector<MethodInfo>& methods) {
    for (const auto& m : methods) {
      out.max_params = std::max(out.max_params, static_cast<int>(m.params.size()));
      for (const auto& p : m.params) {
        if (p.type_name != cls.name && is_user_defined(p.type_name, model)) {
          dependencies.insert(p.type_name);
        }
      }
    }
  };
  scan(cls.methods);
  scan(cls.constructors);
  out.coupling_degree = static_cast<int>(dependencies.size());
  if (cls.base) out.base_names.push_back(*cls.base);
  out.base_count = static_cast<int>(out.base_names.size());
  return out;
}

UsageStats usage_stats(const ProgramModel& model) {
  UsageStats stats;
  for (const auto& name : model.declaration_order) stats.per_class.push_back({name, 0, 0});
  auto slot = [&](const std::string& type) -> ClassUsage* {
    for (auto& u : stats.per_class) {
      if (u.class_name == type) return &u;
    }
    return nullptr;
  };
  for (const ClassInfo* cls : model.ordered()) {
    auto count = [&](const std::vector<MethodInfo>& methods) {
      for (const auto& m : methods) {
        for (const auto& p : m.params) {
          if (ClassUsage* u = slot(p.type_name)) ++u->times_as_method_parameter;
        }
        for (const auto& local : m.locals) {
          if (ClassUsage* u = slot(local.type_name)) ++u->times_as_variable_type;
        }
      }
    };
    count(cls->methods);
    count(cls->constructors);
  }
  for (std::size_t i = 0; i < stats.per_class.size(); ++i) {
    if (!stats.most_used) {
      stats.most_used = i;
      continue;
    }
    const ClassUsage& best = stats.per_class[*stats.most_used];
    const ClassUsage& cand = stats.per_class[i];
    if (cand.times_as_method_parameter > best.times_as_method_parameter ||
        (cand.times_as_method_parameter == best.times_as_method_parameter &&
         cand.times_as_variable_type > best.times_as_variable_type)) {
      stats.most_used = i;
    }
  }
  return stats;
}

}  // namespace integdistill
