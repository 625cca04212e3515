#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "integdistill/semantic.hpp"

namespace integdistill {

/// A method or constructor taking at least one object of a user-defined class.
struct CouplingMethod {
  const MethodInfo* method = nullptr;
  std::vector<Param> coupling_params;  // declaration order
  bool self_coupling = false;          // some coupling param has the owner's own type
};

struct ClassMetrics {
  std::string class_name;
  int method_count = 0;
  int constructor_count = 0;
  int max_params = 0;  // over methods and constructors
  int coupling_degree = 0;
  std::vector<std::string> base_names;
  int base_count = 0;
};

struct ClassUsage {
  std::string class_name;
  int times_as_method_parameter = 0;
  int times_as_variable_type = 0;
};

struct UsageStats {
  std::vector<ClassUsage> per_class;  // class declaration order
  std::optional<std::size_t> most_used;

  const ClassUsage* most_used_class() const {
    return most_used ? &per_class[*most_used] : nullptr;
  }
  const ClassUsage* find(std::string_view name) const;
};

/// Ordinary methods with a user-defined-class parameter, class then method
/// declaration order. Visibility is ignored.
std::vector<CouplingMethod> find_coupling_methods(const ProgramModel& model);

std::vector<CouplingMethod> find_coupling_constructors(const ProgramModel& model);

ClassMetrics class_metrics(const ProgramModel& model, const ClassInfo& cls);

/// Parameter counts include constructors. Most-used is the argmax of the
/// parameter count, tie-broken by variable-type count, then declaration order.
UsageStats usage_stats(const ProgramModel& model);

}  // namespace integdistill
