#include <algorithm>
#include <cctype>
#include <map>

#include "integdistill/pathgen.hpp"

namespace integdistill {

namespace {

bool on_path(const std::vector<const MethodInfo*>& path, const MethodInfo* m) {
  return std::find(path.begin(), path.end(), m) != path.end();
}

class TreeBuilder {
 public:
  TreeBuilder(const ClassInfo& cls, std::vector<DefUseEdge>& edges) : cls_(cls), edges_(edges) {}

  void expand(PathNode& node, std::vector<const MethodInfo*>& path) {
    for (const auto& use : node.method->uses) {
      for (const MethodInfo* definer : definers_of(use.field, cls_)) {
        if (on_path(path, definer)) continue;
        bool already_child = std::any_of(node.children.begin(), node.children.end(),
                                         [&](const PathNode& c) { return c.method == definer; });
        if (already_child) continue;
        node.children.push_back({definer, {}});
        edges_.push_back({node.method, use.field, definer});
      }
    }
    for (auto& child : node.children) {
      path.push_back(child.method);
      expand(child, path);
      path.pop_back();
    }
  }

 private:
  const ClassInfo& cls_;
  std::vector<DefUseEdge>& edges_;
};

void collect_walks(const PathNode& node, std::vector<const MethodInfo*>& prefix,
                   std::vector<TestPath>& out) {
  prefix.push_back(node.method);
  if (node.children.empty()) {
    TestPath path;
    path.kind = PathKind::method;
    path.nodes = prefix;
    out.push_back(std::move(path));
  }
  for (const auto& child : node.children) collect_walks(child, prefix, out);
  prefix.pop_back();
}

std::string default_literal(const std::string& type_name) {
  if (type_name == "int") return "0";
  if (type_name == "string") return "\"\"";
  return "null";
}

// Emits instantiation statements for the objects a test path needs.
class Instantiator {
 public:
  explicit Instantiator(const ProgramModel& model) : model_(model) {}

  std::vector<ExecutionStep>& steps() { return steps_; }

  std::string argument_for(const Param& p) {
    if (is_user_defined(p.type_name, model_)) return instantiate(p.type_name);
    return default_literal(p.type_name);
  }

  std::string arguments(const std::vector<Param>& params) {
    std::string out;
    for (const auto& p : params) {
      if (!out.empty()) out += ", ";
      out += argument_for(p);
    }
    return out;
  }

  std::string instantiate(const std::string& class_name) {
    std::vector<std::string> in_progress;
    const MethodInfo* ctor = nullptr;
    if (!choose(class_name, in_progress, ctor)) {
      throw UnconstructibleDependency("no constructor chain can create an instance of '" +
                                      class_name + "'");
    }
    return emit_new(class_name, ctor, in_progress);
  }

  std::string fresh_name(const std::string& class_name) {
    std::string base = class_name;
    base[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(base[0])));
    return base + std::to_string(++counters_[class_name]);
  }

  std::string emit_new(const std::string& class_name, const MethodInfo* ctor,
                       std::vector<std::string>& chain) {
    std::string args;
    if (ctor != nullptr) {
      chain.push_back(class_name);
      for (const auto& p : ctor->params) {
        if (!args.empty()) args += ", ";
        if (is_user_defined(p.type_name, model_)) {
          const MethodInfo* dep = nullptr;
          choose(p.type_name, chain, dep);
          args += emit_new(p.type_name, dep, chain);
        } else {
          args += default_literal(p.type_name);
        }
      }
      chain.pop_back();
    }
    std::string var = fresh_name(class_name);
    steps_.push_back({ExecutionStep::Kind::instantiate, class_name,
                      class_name + " " + var + " = new " + class_name + "(" + args + ");"});
    return var;
  }

 private:
  // Picks the constructor to use for `class_name`: the parameterless one when
  // present, otherwise the first declared one whose requirements are
  // satisfiable without revisiting a class already being built.
  bool choose(const std::string& class_name, std::vector<std::string>& in_progress,
              const MethodInfo*& chosen) {
    const ClassInfo* cls = model_.find(class_name);
    chosen = nullptr;
    if (cls == nullptr || cls->constructors.empty()) return true;
    if (std::find(in_progress.begin(), in_progress.end(), class_name) != in_progress.end()) {
      return false;
    }
    std::vector<const MethodInfo*> candidates;
    for (const auto& c : cls->constructors) {
      if (c.params.empty()) candidates.push_back(&c);
    }
    for (const auto& c : cls->constructors) {
      if (!c.params.empty()) candidates.push_back(&c);
    }
    in_progress.push_back(class_name);
    for (const MethodInfo* c : candidates) {
      bool ok = true;
      for (const auto& p : c->params) {
        const MethodInfo* ignored = nullptr;
        if (is_user_defined(p.type_name, model_) && !choose(p.type_name, in_progress, ignored)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        in_progress.pop_back();
        chosen = c;
        return true;
      }
    }
    in_progress.pop_back();
    return false;
  }

  const ProgramModel& model_;
  std::map<std::string, int> counters_;
  std::vector<ExecutionStep> steps_;
};

}  // namespace

std::vector<const MethodInfo*> definers_of(std::string_view field, const ClassInfo& cls) {
  std::vector<const MethodInfo*> out;
  for (const auto& m : cls.methods) {
    if (m.defines(field)) out.push_back(&m);
  }
  return out;
}

TreeBuild build_tree(const CouplingMethod& coupling, const ProgramModel& model) {
  TreeBuild out;
  out.tree.root.method = coupling.method;
  const ClassInfo* cls = model.find(coupling.method->owner);
  if (cls == nullptr || coupling.method->is_constructor) return out;
  TreeBuilder builder(*cls, out.edges);
  std::vector<const MethodInfo*> path{coupling.method};
  builder.expand(out.tree.root, path);
  return out;
}

std::vector<TestPath> enumerate_paths(std::span<const PathTree> trees,
                                      std::span<const CouplingMethod> constructors) {
  std::vector<TestPath> out;
  for (const auto& tree : trees) {
    std::vector<const MethodInfo*> prefix;
    collect_walks(tree.root, prefix, out);
  }
  for (const auto& ctor : constructors) {
    TestPath path;
    path.kind = PathKind::constructor;
    path.nodes = {ctor.method};
    out.push_back(std::move(path));
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i + 1);
  return out;
}

std::vector<ExecutionStep> execution_order(const TestPath& path, const ProgramModel& model) {
  if (path.nodes.empty()) return {};
  Instantiator inst(model);
  const MethodInfo* root = path.nodes.front();
  std::vector<ExecutionStep> calls;

  if (path.kind == PathKind::constructor) {
    std::string args = inst.arguments(root->params);
    std::string var = inst.fresh_name(root->owner);
    calls.push_back({ExecutionStep::Kind::call, root->owner,
                     root->owner + " " + var + " = new " + root->owner + "(" + args + ");"});
  } else {
    std::string receiver = inst.instantiate(root->owner);
    for (auto it = path.nodes.rbegin(); it != path.nodes.rend(); ++it) {
      const MethodInfo* m = *it;
      std::string args = inst.arguments(m->params);
      calls.push_back({ExecutionStep::Kind::call, m->owner,
                       receiver + "." + m->name + "(" + args + ");"});
    }
  }

  std::vector<ExecutionStep> steps = std::move(inst.steps());
  steps.insert(steps.end(), calls.begin(), calls.end());
  return steps;
}

}  // namespace integdistill
