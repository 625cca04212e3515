#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "integdistill/coupling.hpp"
#include "integdistill/semantic.hpp"

namespace integdistill {

/// `from` reads `field`, `to` writes it; both belong to the same class.
struct DefUseEdge {
  const MethodInfo* from = nullptr;
  std::string field;
  const MethodInfo* to = nullptr;
};

struct PathNode {
  const MethodInfo* method = nullptr;
  std::vector<PathNode> children;
};

/// Rooted at a coupling method; a child defines some field its parent reads.
/// No method repeats along any root-to-node walk.
struct PathTree {
  PathNode root;
};

enum class PathKind { method, constructor };

/// Root first; tests execute it leaf first.
struct TestPath {
  int id = 0;
  PathKind kind = PathKind::method;
  std::vector<const MethodInfo*> nodes;

  std::size_t length() const { return nodes.size(); }
};

struct TreeBuild {
  PathTree tree;
  std::vector<DefUseEdge> edges;  // discovery order
};

/// Non-constructor methods of `cls` writing `field`, in declaration order.
std::vector<const MethodInfo*> definers_of(std::string_view field, const ClassInfo& cls);

TreeBuild build_tree(const CouplingMethod& coupling, const ProgramModel& model);

/// Root-to-leaf walks of every tree (ids 1..N in tree order), followed by one
/// single-node path per coupling constructor.
std::vector<TestPath> enumerate_paths(std::span<const PathTree> trees,
                                      std::span<const CouplingMethod> constructors);

struct ExecutionStep {
  enum class Kind { instantiate, call };
  Kind kind = Kind::call;
  std::string class_name;
  std::string text;  // a MiniOO statement, e.g. "B b1 = new B();" or "c1.CM3();"
};

/// Object instantiations the path needs, then its methods leaf to root. For a
/// constructor path the final step is the coupling constructor itself.
/// Throws UnconstructibleDependency if constructor requirements are cyclic.
std::vector<ExecutionStep> execution_order(const TestPath& path, const ProgramModel& model);

}  // namespace integdistill
