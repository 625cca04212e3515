#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "integdistill/semantic.hpp"

namespace integdistill {

namespace {

bool contains(const std::vector<FieldAccess>& set, std::string_view field) {
  return std::any_of(set.begin(), set.end(),
                     [&](const FieldAccess& a) { return a.field == field; });
}

// Walks a method body once, tracking lexical scopes so that locals and
// parameters hide same-named fields.
class BodyWalker {
 public:
  BodyWalker(const MethodDecl& method, const ClassInfo& owner, const ProgramModel* model)
      : method_(method), owner_(owner), model_(model) {
    scopes_.emplace_back();
    for (const auto& p : method.params) scopes_.back()[p.name] = p.type_name;
  }

  void run() {
    for (const auto& stmt : method_.body) walk(*stmt);
  }

  std::vector<FieldAccess> take_defs() { return finish(defs_); }
  std::vector<FieldAccess> take_uses() { return finish(uses_); }
  std::vector<RawInvocation> take_invocations() { return std::move(invocations_); }
  std::vector<LocalVar> take_locals() { return std::move(locals_); }

 private:
  using Scope = std::unordered_map<std::string, std::string>;

  const std::string* lookup_local(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return &found->second;
    }
    return nullptr;
  }

  const FieldInfo* as_field(const std::string& name) const {
    if (lookup_local(name) != nullptr) return nullptr;
    return owner_.find_field(name);
  }

  static void record(std::map<std::string, FieldAccess>& into, const ClassInfo& owner,
                     const FieldInfo& field, int line) {
    auto [it, inserted] = into.try_emplace(field.name);
    if (inserted) {
      it->second.field = field.name;
      it->second.declaring_class = field.declaring_class;
      it->second.order = *owner.field_order(field.name);
    }
    it->second.lines.push_back(line);
  }

  static std::vector<FieldAccess> finish(std::map<std::string, FieldAccess>& set) {
    std::vector<FieldAccess> out;
    for (auto& [name, access] : set) {
      std::sort(access.lines.begin(), access.lines.end());
      out.push_back(std::move(access));
    }
    std::sort(out.begin(), out.end(),
              [](const FieldAccess& a, const FieldAccess& b) { return a.order < b.order; });
    return out;
  }

  // Resolves the field named directly by `target`, if any: bare `f` or `this.f`.
  const FieldInfo* field_of(const Expr& expr) const {
    if (const auto* id = std::get_if<IdentifierExpr>(&expr.node)) return as_field(id->name);
    if (const auto* member = std::get_if<MemberAccessExpr>(&expr.node)) {
      if (std::holds_alternative<ThisExpr>(member->object->node)) {
        return owner_.find_field(member->member);
      }
    }
    return nullptr;
  }

  void walk(const Stmt& stmt) {
    std::visit([&](const auto& node) { walk_node(node); }, stmt.node);
  }

  void walk_scoped(const Stmt& stmt) {
    scopes_.emplace_back();
    walk(stmt);
    scopes_.pop_back();
  }

  void walk_node(const LocalDeclStmt& decl) {
    for (const auto& d : decl.declarators) {
      if (d.init) read(*d.init);
      scopes_.back()[d.name] = decl.type_name;
      locals_.push_back({d.name, decl.type_name, d.line});
    }
  }
  void walk_node(const AssignStmt& assign) {
    write(*assign.target, assign.op != "=");
    read(*assign.value);
  }
  void walk_node(const IncDecStmt& incdec) { write(*incdec.target, true); }
  void walk_node(const ExprStmt& stmt) { read(*stmt.expr); }
  void walk_node(const ReturnStmt& ret) {
    if (ret.value) read(*ret.value);
  }
  void walk_node(const BlockStmt& block) {
    scopes_.emplace_back();
    for (const auto& s : block.statements) walk(*s);
    scopes_.pop_back();
  }
  void walk_node(const IfStmt& node) {
    read(*node.condition);
    walk_scoped(*node.then_branch);
    if (node.else_branch) walk_scoped(*node.else_branch);
  }
  void walk_node(const WhileStmt& node) {
    read(*node.condition);
    walk_scoped(*node.body);
  }

  void write(const Expr& target, bool also_reads) {
    if (const FieldInfo* field = field_of(target)) {
      record(defs_, owner_, *field, target.line);
      if (also_reads) record(uses_, owner_, *field, target.line);
      return;
    }
    // `obj.f = ...` stores into another object; `obj` itself is only read.
    if (const auto* member = std::get_if<MemberAccessExpr>(&target.node)) {
      read(*member->object);
    }
  }

  void read(const Expr& expr) {
    if (const FieldInfo* field = field_of(expr)) {
      record(uses_, owner_, *field, expr.line);
      return;
    }
    std::visit([&](const auto& node) { read_node(expr, node); }, expr.node);
  }

  void read_node(const Expr&, const IdentifierExpr&) {}
  void read_node(const Expr&, const ThisExpr&) {}
  void read_node(const Expr&, const LiteralExpr&) {}
  void read_node(const Expr&, const MemberAccessExpr& member) { read(*member.object); }
  void read_node(const Expr& expr, const CallExpr& call) {
    if (call.receiver) read(*call.receiver);
    RawInvocation inv;
    inv.line = expr.line;
    inv.column = expr.column;
    inv.receiver_text = call.receiver_text;
    inv.receiver_type = call.receiver ? type_of(*call.receiver) : owner_.name;
    inv.callee = call.callee;
    inv.arg_count = call.args.size();
    inv.call_text = call.text;
    invocations_.push_back(std::move(inv));
    for (const auto& arg : call.args) read(*arg);
  }
  void read_node(const Expr&, const NewExpr& node) {
    for (const auto& arg : node.args) read(*arg);
  }
  void read_node(const Expr&, const UnaryExpr& node) { read(*node.operand); }
  void read_node(const Expr&, const BinaryExpr& node) {
    read(*node.lhs);
    read(*node.rhs);
  }

  const ClassInfo* class_named(const std::string& name) const {
    if (name == owner_.name) return &owner_;
    return model_ != nullptr ? model_->find(name) : nullptr;
  }

  std::optional<std::string> type_of(const Expr& expr) const {
    if (std::holds_alternative<ThisExpr>(expr.node)) return owner_.name;
    if (const auto* id = std::get_if<IdentifierExpr>(&expr.node)) {
      if (const std::string* local = lookup_local(id->name)) return *local;
      if (const FieldInfo* field = owner_.find_field(id->name)) return field->type_name;
      if (class_named(id->name) != nullptr) return id->name;
      return std::nullopt;
    }
    if (const auto* member = std::get_if<MemberAccessExpr>(&expr.node)) {
      auto object_type = type_of(*member->object);
      if (!object_type) return std::nullopt;
      const ClassInfo* cls = class_named(*object_type);
      if (cls == nullptr) return std::nullopt;
      if (const FieldInfo* field = cls->find_field(member->member)) return field->type_name;
      return std::nullopt;
    }
    if (const auto* created = std::get_if<NewExpr>(&expr.node)) return created->class_name;
    return std::nullopt;
  }

  const MethodDecl& method_;
  const ClassInfo& owner_;
  const ProgramModel* model_;
  std::vector<Scope> scopes_;
  std::map<std::string, FieldAccess> defs_;
  std::map<std::string, FieldAccess> uses_;
  std::vector<RawInvocation> invocations_;
  std::vector<LocalVar> locals_;
};

MethodInfo make_method_info(const MethodDecl& decl, std::size_t index, const ClassInfo& owner,
                            const ProgramModel& model) {
  MethodInfo info;
  info.owner = owner.name;
  info.name = decl.name;
  info.signature = decl.signature();
  info.params = decl.params;
  info.is_constructor = decl.is_constructor;
  info.index = index;
  info.span = decl.span;
  BodyWalker walker(decl, owner, &model);
  walker.run();
  info.defs = walker.take_defs();
  info.uses = walker.take_uses();
  info.invocations = walker.take_invocations();
  info.locals = walker.take_locals();
  return info;
}

}  // namespace

bool MethodInfo::defines(std::string_view field) const { return contains(defs, field); }
bool MethodInfo::reads(std::string_view field) const { return contains(uses, field); }

const FieldInfo* ClassInfo::find_field(std::string_view field) const {
  for (const auto& f : effective_fields) {
    if (f.name == field) return &f;
  }
  return nullptr;
}

std::optional<std::size_t> ClassInfo::field_order(std::string_view field) const {
  for (std::size_t i = 0; i < effective_fields.size(); ++i) {
    if (effective_fields[i].name == field) return i;
  }
  return std::nullopt;
}

const ClassInfo* ProgramModel::find(std::string_view name) const {
  auto it = classes.find(name);
  return it == classes.end() ? nullptr : &it->second;
}

std::vector<const ClassInfo*> ProgramModel::ordered() const {
  std::vector<const ClassInfo*> out;
  out.reserve(declaration_order.size());
  for (const auto& name : declaration_order) out.push_back(find(name));
  return out;
}

bool is_user_defined(std::string_view type_name, const ProgramModel& model) {
  return !type_name.empty() && model.find(type_name) != nullptr;
}

ProgramModel build_model(std::span<const SyntaxTree> trees) {
  ProgramModel model;
  std::unordered_map<std::string, const ClassDecl*> decls;

  for (const auto& tree : trees) {
    for (const auto& cls : tree.classes) {
      if (model.classes.contains(cls.name)) {
        throw SemanticError("duplicate class '" + cls.name + "' (first declared in " +
                                model.classes.find(cls.name)->second.source_path + ")",
                            tree.source_path, cls.span.start_line, 0);
      }
      ClassInfo info;
      info.name = cls.name;
      info.source_path = tree.source_path;
      info.span = cls.span;
      if (!cls.base_names.empty()) info.base = cls.base_names.front();
      std::set<std::string, std::less<>> seen;
      for (const auto& field : cls.field_decls) {
        if (!seen.insert(field.name).second) {
          throw SemanticError("duplicate field '" + field.name + "' in class '" + cls.name + "'",
                              tree.source_path, field.line, 0);
        }
        info.own_fields.push_back(
            {field.name, field.type_name, cls.name, info.own_fields.size()});
      }
      model.declaration_order.push_back(cls.name);
      decls.emplace(cls.name, &cls);
      model.classes.emplace(cls.name, std::move(info));
    }
  }

  for (auto& [name, info] : model.classes) {
    info.base_resolved = info.base.has_value() && model.classes.contains(*info.base);
    std::set<std::string> chain{name};
    const ClassInfo* cur = &info;
    while (cur->base && model.classes.contains(*cur->base)) {
      if (!chain.insert(*cur->base).second) {
        throw SemanticError("inheritance cycle involving class '" + name + "'", info.source_path,
                            info.span.start_line, 0);
      }
      cur = &model.classes.at(*cur->base);
    }
  }

  // Effective fields, base-first. Recursion terminates: cycles were rejected.
  std::set<std::string, std::less<>> resolved;
  std::function<void(ClassInfo&)> resolve_fields = [&](ClassInfo& info) {
    if (!resolved.insert(info.name).second) return;
    std::vector<FieldInfo> fields;
    if (info.base_resolved) {
      ClassInfo& base = model.classes.at(*info.base);
      resolve_fields(base);
      fields = base.effective_fields;
    }
    for (const auto& own : info.own_fields) {
      for (const auto& inherited : fields) {
        if (inherited.name == own.name) {
          throw SemanticError("field '" + own.name + "' in class '" + info.name +
                                  "' shadows the field inherited from '" +
                                  inherited.declaring_class + "'",
                              info.source_path,
                              decls.at(info.name)->field_decls[own.declaration_index].line, 0);
        }
      }
      fields.push_back(own);
    }
    info.effective_fields = std::move(fields);
  };
  for (auto& [name, info] : model.classes) resolve_fields(info);

  for (auto& [name, info] : model.classes) {
    const ClassDecl& decl = *decls.at(name);
    for (std::size_t i = 0; i < decl.constructors.size(); ++i) {
      info.constructors.push_back(make_method_info(decl.constructors[i], i, info, model));
    }
    for (std::size_t i = 0; i < decl.methods.size(); ++i) {
      info.methods.push_back(make_method_info(decl.methods[i], i, info, model));
    }
  }
  return model;
}

std::pair<std::vector<FieldAccess>, std::vector<FieldAccess>> extract_def_use(
    const MethodDecl& method, const ClassInfo& owner) {
  BodyWalker walker(method, owner, nullptr);
  walker.run();
  auto defs = walker.take_defs();
  auto uses = walker.take_uses();
  return {std::move(defs), std::move(uses)};
}

std::vector<RawInvocation> extract_invocations(const MethodDecl& method, const ClassInfo& owner,
                                               const ProgramModel* model) {
  BodyWalker walker(method, owner, model);
  walker.run();
  return walker.take_invocations();
}

}  // namespace integdistill
