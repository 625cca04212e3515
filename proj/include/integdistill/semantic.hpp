#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "integdistill/error.hpp"
#include "integdistill/syntax.hpp"

namespace integdistill {

struct FieldInfo {
  std::string name;
  std::string type_name;
  std::string declaring_class;
  std::size_t declaration_index = 0;  // position within the declaring class
};

/// One field in a method's def or use set. `order` is the field's position in
/// the owner's effective field list and fixes iteration order.
struct FieldAccess {
  std::string field;
  std::string declaring_class;
  std::size_t order = 0;
  std::vector<int> lines;
};

struct LocalVar {
  std::string name;
  std::string type_name;
  int line = 0;
};

/// A call expression as found in a method body, before any cross-class
/// filtering. `receiver_type` is empty when the receiver's declared type is
/// unknown (e.g. the static `Console` in `Console.WriteLine()`).
struct RawInvocation {
  int line = 0;
  int column = 0;
  std::string receiver_text;
  std::optional<std::string> receiver_type;
  std::string callee;
  std::size_t arg_count = 0;
  std::string call_text;
};

struct MethodInfo {
  std::string owner;
  std::string name;
  std::string signature;  // e.g. "CM7(B b, A a)"
  std::vector<Param> params;
  bool is_constructor = false;
  std::size_t index = 0;  // declaration index among the owner's ctors or methods
  SourceSpan span;
  std::vector<FieldAccess> defs;
  std::vector<FieldAccess> uses;
  std::vector<RawInvocation> invocations;
  std::vector<LocalVar> locals;

  bool defines(std::string_view field) const;
  bool reads(std::string_view field) const;
};

struct ClassInfo {
  std::string name;
  std::optional<std::string> base;
  bool base_resolved = false;
  std::string source_path;
  SourceSpan span;
  std::vector<FieldInfo> own_fields;
  std::vector<FieldInfo> effective_fields;  // base-first, then own
  std::vector<MethodInfo> constructors;
  std::vector<MethodInfo> methods;

  const FieldInfo* find_field(std::string_view name) const;
  std::optional<std::size_t> field_order(std::string_view name) const;
};

/// Resolved view of all analyzed sources. Other modules hold pointers into
/// it, so it must outlive their results and must not be copied from under
/// them.
struct ProgramModel {
  std::map<std::string, ClassInfo, std::less<>> classes;
  std::vector<std::string> declaration_order;

  const ClassInfo* find(std::string_view name) const;

  /// Classes in declaration order.
  std::vector<const ClassInfo*> ordered() const;
};

/// Throws SemanticError on duplicate classes, inheritance cycles, and field
/// shadowing.
ProgramModel build_model(std::span<const SyntaxTree> trees);

/// Flow-insensitive def/use sets over the owner's effective fields.
std::pair<std::vector<FieldAccess>, std::vector<FieldAccess>> extract_def_use(
    const MethodDecl& method, const ClassInfo& owner);

/// Every call expression in the body, in source order, with the receiver's
/// declared type resolved where possible. `model` supplies class names for
/// static receivers and field types for `obj.field.f()` chains.
std::vector<RawInvocation> extract_invocations(const MethodDecl& method,
                                               const ClassInfo& owner,
                                               const ProgramModel* model = nullptr);

bool is_user_defined(std::string_view type_name, const ProgramModel& model);

}  // namespace integdistill
