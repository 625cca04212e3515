#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "integdistill/semantic.hpp"

namespace integdistill {

/// Platform classes the analyzed sources may call without declaring.
using BuiltinClasses = std::set<std::string, std::less<>>;

BuiltinClasses default_builtin_classes();

/// A call site targeting a method of a class other than the enclosing one.
struct InvocationPoint {
  std::string file;
  int line = 0;
  int column = 0;
  std::string call_text;
  std::string target_class;
  bool user_defined = false;
  bool builtin = false;  // target is in the configured builtin list
  std::string enclosing_class;
  std::string enclosing_method;
  std::size_t method_index = 0;
  bool in_constructor = false;
  std::string receiver;
};

struct MethodInvocationCount {
  std::string name;
  std::string signature;
  bool is_constructor = false;
  int total = 0;
  int user_defined = 0;
};

struct ClassInvocationSummary {
  std::string class_name;
  int total = 0;
  int user_defined = 0;
  std::vector<MethodInvocationCount> methods;       // declaration order
  std::vector<MethodInvocationCount> constructors;  // declaration order
};

struct InvocationSummary {
  std::vector<ClassInvocationSummary> classes;  // class declaration order

  const ClassInvocationSummary* find(std::string_view class_name) const;
};

/// Cross-class call sites, grouped by class in declaration order and in
/// source order within a class. Calls whose receiver type is unknown target
/// the receiver text and are not user-defined.
std::vector<InvocationPoint> find_invocation_points(
    const ProgramModel& model, const BuiltinClasses& builtins = default_builtin_classes());

InvocationSummary summarize(std::span<const InvocationPoint> points, const ProgramModel& model);

}  // namespace integdistill
