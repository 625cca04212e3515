#include <algorithm>
#include <tuple>

#include "integdistill/invocations.hpp"

namespace integdistill {

BuiltinClasses default_builtin_classes() { return {"Console", "DateTime", "TimeSpan", "Clock"}; }

const ClassInvocationSummary* InvocationSummary::find(std::string_view class_name) const {
  for (const auto& c : classes) {
    if (c.class_name == class_name) return &c;
  }
  return nullptr;
}

std::vector<InvocationPoint> find_invocation_points(const ProgramModel& model,
                                                    const BuiltinClasses& builtins) {
  std::vector<InvocationPoint> out;
  for (const ClassInfo* cls : model.ordered()) {
    std::vector<InvocationPoint> in_class;
    auto scan = [&](const std::vector<MethodInfo>& methods) {
      for (const auto& m : methods) {
        for (const auto& inv : m.invocations) {
          std::string target = inv.receiver_type.value_or(inv.receiver_text);
          if (target == cls->name) continue;
          InvocationPoint p;
          p.file = cls->source_path;
          p.line = inv.line;
          p.column = inv.column;
          p.call_text = inv.call_text;
          p.user_defined = is_user_defined(target, model);
          p.builtin = builtins.contains(target);
          p.target_class = std::move(target);
          p.enclosing_class = cls->name;
          p.enclosing_method = m.name;
          p.method_index = m.index;
          p.in_constructor = m.is_constructor;
          p.receiver = inv.receiver_text;
          in_class.push_back(std::move(p));
        }
      }
    };
    scan(cls->constructors);
    scan(cls->methods);
    std::stable_sort(in_class.begin(), in_class.end(),
                     [](const InvocationPoint& a, const InvocationPoint& b) {
                       return std::tie(a.line, a.column) < std::tie(b.line, b.column);
                     });
    out.insert(out.end(), in_class.begin(), in_class.end());
  }
  return out;
}

InvocationSummary summarize(std::span<const InvocationPoint> points, const ProgramModel& model) {
  InvocationSummary summary;
  for (const ClassInfo* cls : model.ordered()) {
    ClassInvocationSummary c;
    c.class_name = cls->name;
    for (const auto& m : cls->constructors) c.constructors.push_back({m.name, m.signature, true});
    for (const auto& m : cls->methods) c.methods.push_back({m.name, m.signature, false});
    for (const auto& p : points) {
      if (p.enclosing_class != cls->name) continue;
      auto& slots = p.in_constructor ? c.constructors : c.methods;
      if (p.method_index >= slots.size()) continue;
      MethodInvocationCount& slot = slots[p.method_index];
      ++slot.total;
      ++c.total;
      if (p.user_defined) {
        ++slot.user_defined;
        ++c.user_defined;
      }
    }
    summary.classes.push_back(std::move(c));
  }
  return summary;
}

}  // namespace integdistill
