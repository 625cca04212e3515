#include <gtest/gtest.h>

#include <algorithm>

#include "integdistill/parser.hpp"
#include "integdistill/semantic.hpp"
#include "support/fixtures.hpp"
#include "support/random_program.hpp"

using namespace integdistill;

namespace {

ProgramModel model_of(const std::string& src) {
  std::vector<SyntaxTree> trees;
  trees.push_back(parse(src, "t.moo"));
  return build_model(trees);
}

std::vector<std::string> names(const std::vector<FieldAccess>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.field);
  return out;
}

std::set<std::string> name_set(const std::vector<FieldAccess>& xs) {
  auto v = names(xs);
  return {v.begin(), v.end()};
}

const MethodInfo& method(const ProgramModel& m, std::string_view cls, std::string_view name) {
  const ClassInfo* c = m.find(cls);
  for (const auto& x : c->methods) {
    if (x.name == name) return x;
  }
  for (const auto& x : c->constructors) {
    if (x.name == name) return x;
  }
  throw std::runtime_error("no method");
}

}  // namespace

TEST(Model, DemoClassesAndFields) {
  const ProgramModel& m = *testsupport::demo_report().model;
  EXPECT_EQ(m.declaration_order, (std::vector<std::string>{"A", "B", "C"}));
  const ClassInfo* b = m.find("B");
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->base, "A");
  EXPECT_TRUE(b->base_resolved);
  ASSERT_EQ(b->effective_fields.size(), 1u);
  EXPECT_EQ(b->effective_fields[0].declaring_class, "A");
  const ClassInfo* c = m.find("C");
  std::vector<std::string> fields;
  for (const auto& f : c->effective_fields) fields.push_back(f.name);
  EXPECT_EQ(fields, (std::vector<std::string>{"var1", "var2", "var3", "var4", "var5"}));
}

TEST(DefUse, DemoSets) {
  const ProgramModel& m = *testsupport::demo_report().model;
  EXPECT_EQ(names(method(m, "C", "CM1").defs), std::vector<std::string>{"var5"});
  EXPECT_EQ(names(method(m, "C", "CM1").uses), std::vector<std::string>{"var4"});
  EXPECT_EQ(names(method(m, "C", "CM6").defs), (std::vector<std::string>{"var1", "var2"}));
  EXPECT_EQ(names(method(m, "C", "CM6").uses), (std::vector<std::string>{"var1", "var3", "var4"}));
  EXPECT_EQ(names(method(m, "C", "CM7").uses), (std::vector<std::string>{"var1", "var2", "var3"}));
  EXPECT_TRUE(method(m, "C", "CM7").defs.empty());
  EXPECT_EQ(names(method(m, "B", "Add").defs), std::vector<std::string>{"x"});
  EXPECT_EQ(names(method(m, "B", "Add").uses), std::vector<std::string>{"x"});
  const auto& add_x = method(m, "B", "Add").defs[0];
  EXPECT_EQ(add_x.declaring_class, "A");
  EXPECT_EQ(add_x.lines, std::vector<int>{10});
  // b.x in C's constructor reads another object's field, not one of C's.
  EXPECT_EQ(names(method(m, "C", "C").defs), std::vector<std::string>{"var1"});
  EXPECT_TRUE(method(m, "C", "C").uses.empty());
}

TEST(DefUse, CompoundAssignmentAndIncrementAreBoth) {
  ProgramModel m = model_of(
      "class A { int a; int b; int c; int d;\n"
      " void m() { a += 1; b++; --c; this.d = d; } }");
  const MethodInfo& mi = m.find("A")->methods[0];
  EXPECT_EQ(name_set(mi.defs), (std::set<std::string>{"a", "b", "c", "d"}));
  EXPECT_EQ(name_set(mi.uses), (std::set<std::string>{"a", "b", "c", "d"}));
}

TEST(DefUse, LocalsAndParamsShadowFields) {
  ProgramModel m = model_of(
      "class A { int x; int y;\n"
      " void m(int x) { x = 1; this.y = x; }\n"
      " void n() { y = 2; int x = y; x = 3; this.x = x; }\n"
      " void o() { if (y > 0) { int x; x = 1; } x = 2; } }");
  const ClassInfo* a = m.find("A");
  EXPECT_EQ(names(a->methods[0].defs), std::vector<std::string>{"y"});
  EXPECT_TRUE(a->methods[0].uses.empty());
  EXPECT_EQ(names(a->methods[1].defs), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(names(a->methods[1].uses), std::vector<std::string>{"y"});
  // The block-scoped local ends with its block.
  EXPECT_EQ(names(a->methods[2].defs), std::vector<std::string>{"x"});
}

TEST(DefUse, InheritedFieldsOrderBaseFirst) {
  ProgramModel m = model_of(
      "class P { int p; }\n"
      "class Q : P { int q; void m() { q = p; p = q; } }");
  const ClassInfo* q = m.find("Q");
  EXPECT_EQ(q->effective_fields[0].name, "p");
  EXPECT_EQ(names(q->methods[0].defs), (std::vector<std::string>{"p", "q"}));
  EXPECT_EQ(q->methods[0].defs[0].order, 0u);
}

TEST(Semantic, Errors) {
  EXPECT_THROW(model_of("class A {} class A {}"), SemanticError);
  EXPECT_THROW(model_of("class A { int x; int x; }"), SemanticError);
  EXPECT_THROW(model_of("class A : B {} class B : A {}"), SemanticError);
  EXPECT_THROW(model_of("class A { int x; } class B : A { int x; }"), SemanticError);
  try {
    model_of("class A {}\nclass A {}");
  } catch (const SemanticError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.path(), "t.moo");
  }
}

TEST(Semantic, UnknownBaseIsKeptUnresolved) {
  ProgramModel m = model_of("class A : Form { }");
  EXPECT_EQ(m.find("A")->base, "Form");
  EXPECT_FALSE(m.find("A")->base_resolved);
}

TEST(Invocations, RawCallsResolveReceiverTypes) {
  const ProgramModel& m = *testsupport::demo_report().model;
  const auto& calls = method(m, "C", "CM6").invocations;
  ASSERT_EQ(calls.size(), 4u);
  EXPECT_EQ(calls[0].call_text, "b1.Add(2)");
  EXPECT_EQ(calls[0].receiver_type, "B");
  EXPECT_EQ(calls[0].line, 58);
  EXPECT_EQ(calls[2].call_text, "this.CM5()");
  EXPECT_EQ(calls[2].receiver_type, "C");
  EXPECT_EQ(calls[3].call_text, "c3.CM4()");
  EXPECT_EQ(calls[3].receiver_type, "C");
  EXPECT_EQ(calls[3].line, 62);
  const auto& cm4 = method(m, "C", "CM4").invocations;
  ASSERT_EQ(cm4.size(), 1u);
  EXPECT_FALSE(cm4[0].receiver_type.has_value());
  EXPECT_EQ(cm4[0].receiver_text, "Console");
}

TEST(DefUseProperty, SetsAreWithinEffectiveFields) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    ProgramModel m = model_of(testsupport::random_program(seed));
    for (const ClassInfo* c : m.ordered()) {
      auto check = [&](const MethodInfo& mi) {
        for (const auto* set : {&mi.defs, &mi.uses}) {
          std::size_t prev = 0;
          bool first = true;
          for (const auto& a : *set) {
            ASSERT_NE(c->find_field(a.field), nullptr) << "seed " << seed;
            ASSERT_EQ(c->field_order(a.field), a.order);
            ASSERT_TRUE(first || a.order > prev) << "unsorted, seed " << seed;
            prev = a.order;
            first = false;
          }
        }
      };
      for (const auto& mi : c->methods) check(mi);
      for (const auto& mi : c->constructors) check(mi);
    }
  }
}

TEST(DefUseOracle, DemoMatchesTokenScan) {
  SyntaxTree tree = parse(testsupport::demo_source());
  const ProgramModel& m = *testsupport::demo_report().model;
  auto oracle = testsupport::scan_program(tree, m);
  for (const ClassInfo* c : m.ordered()) {
    for (const auto* list : {&c->constructors, &c->methods}) {
      for (const auto& mi : *list) {
        testsupport::DefUseSets got{name_set(mi.defs), name_set(mi.uses)};
        EXPECT_EQ(got, oracle.at(c->name + "." + mi.signature)) << mi.signature;
      }
    }
  }
}

TEST(DefUseOracle, RandomShadowFreePrograms) {
  for (std::uint64_t seed = 1000; seed < 1500; ++seed) {
    std::string src = testsupport::random_program(seed);
    std::vector<SyntaxTree> trees;
    trees.push_back(parse(src));
    ProgramModel m = build_model(trees);
    auto oracle = testsupport::scan_program(trees[0], m);
    for (const ClassInfo* c : m.ordered()) {
      for (const auto* list : {&c->constructors, &c->methods}) {
        for (const auto& mi : *list) {
          testsupport::DefUseSets got{name_set(mi.defs), name_set(mi.uses)};
          ASSERT_EQ(got, oracle.at(c->name + "." + mi.signature))
              << "seed " << seed << " " << c->name << "." << mi.signature << "\n" << src;
        }
      }
    }
  }
}
