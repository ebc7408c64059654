#include <doctest.h>

#include "repairkit/dfg.hpp"
#include "support/genprog.hpp"
#include "support/oracles.hpp"

using namespace repairkit;

namespace {

SyntaxTree tree_of(const std::string& text) {
  ParseOutcome outcome = parse_text(text);
  REQUIRE_FALSE(outcome.failed);
  return *outcome.tree;
}

using Edges = std::vector<std::pair<uint32_t, uint32_t>>;

}  // namespace

TEST_CASE("parameter feeds an initialized declaration") {
  DataFlowGraph g = extract_dfg(tree_of("int f(int a){int b=a; return b;}"));
  CHECK(g.slot_count == 2);
  CHECK(g.edges == Edges{{0, 1}});  // a -> b; the return read adds nothing
}

TEST_CASE("literal initializer creates no edges") {
  DataFlowGraph g = extract_dfg(tree_of("int f(){int a=1; return 0;}"));
  CHECK(g.slot_count == 1);
  CHECK(g.edges.empty());
}

TEST_CASE("graph is invariant under consistent renaming") {
  std::string original = "int f(int a){int b=a; return b;}";
  std::string renamed = "int q(int x){int y=x; return y;}";
  CHECK(extract_dfg(tree_of(original)) == extract_dfg(tree_of(renamed)));
}

TEST_CASE("compound assignment reads its own target") {
  DataFlowGraph g = extract_dfg(tree_of("int f(int a){ a += 1; return a; }"));
  CHECK(g.edges == Edges{{0, 0}});
}

TEST_CASE("increment creates a self edge") {
  DataFlowGraph g = extract_dfg(tree_of("int f(int a){ a++; return a; }"));
  CHECK(g.edges == Edges{{0, 0}});
}

TEST_CASE("condition and return reads create no edges") {
  DataFlowGraph g = extract_dfg(
      tree_of("int f(int a, int b){ if (a > b) { return a; } return b; }"));
  CHECK(g.slot_count == 2);
  CHECK(g.edges.empty());
}

TEST_CASE("if/else joins take the union of definitions") {
  // x is defined only in the then-branch, but it may reach the join
  DataFlowGraph g = extract_dfg(tree_of(
      "int f(int c){ int x; if (c) { x = c; } int y = x; return y; }"));
  // slots: c=0, x=1, y=2; edges: c->x (then), x->y (union reaches)
  CHECK(g.slot_count == 3);
  CHECK(g.edges == Edges{{0, 1}, {1, 2}});
}

TEST_CASE("loop refinement pass catches back edges") {
  DataFlowGraph g = extract_dfg(tree_of(
      "int f(int s){ int u; while (s) { u = t; t = s; } return u; }"));
  // slots: s=0, u=1, t=2; first pass: s->t; second pass sees t defined: t->u
  CHECK(g.slot_count == 3);
  CHECK(g.edges == Edges{{0, 2}, {2, 1}});
}

TEST_CASE("loop rescans do not double count edges") {
  DataFlowGraph g = extract_dfg(tree_of(
      "int f(int a){ int b = 0; while (a) { b = a; } return b; }"));
  CHECK(g.edges == Edges{{0, 1}});  // one site, one edge
}

TEST_CASE("array stores flow subscript and value into the base") {
  DataFlowGraph g = extract_dfg(
      tree_of("int f(int *a, int i, int v){ a[i] = v; return 0; }"));
  // slots: a=0, i=1, v=2
  CHECK(g.edges == Edges{{1, 0}, {2, 0}});
}

TEST_CASE("member stores target the base variable") {
  DataFlowGraph g = extract_dfg(
      tree_of("int f(struct s *p, int v){ p->field = v; return 0; }"));
  // slots: p=0, v=1; the field name is not a variable
  CHECK(g.edges == Edges{{1, 0}});
}

TEST_CASE("callee names are not variables") {
  DataFlowGraph g =
      extract_dfg(tree_of("int f(int a){ int b = helper(a); return b; }"));
  // slots: a=0, b=1 (helper is a function name)
  CHECK(g.slot_count == 2);
  CHECK(g.edges == Edges{{0, 1}});
}

TEST_CASE("undefined reads produce no edges") {
  DataFlowGraph g = extract_dfg(tree_of("int f(){ int b = g; return b; }"));
  // g has a slot but no definition reaches the read
  CHECK(g.slot_count == 2);
  CHECK(g.edges.empty());
}

TEST_CASE("functions get independent scopes") {
  DataFlowGraph g = extract_dfg(tree_of(
      "int f(int a){ int b = a; return b; }\n"
      "int g(int a){ int c = a; return c; }\n"));
  // second function's `a` is a different variable
  CHECK(g.slot_count == 4);
  CHECK(g.edges == Edges{{0, 1}, {2, 3}});
}

TEST_CASE("top-level fragments form an implicit scope") {
  DataFlowGraph g = extract_dfg(tree_of("int a = 1; int b = a;"));
  CHECK(g.slot_count == 2);
  CHECK(g.edges == Edges{{0, 1}});
}

TEST_CASE("slots follow textual first-appearance order") {
  DataFlowGraph g = extract_dfg(
      tree_of("int f(int z){ int first = z; int second = first; return 0; }"));
  // z=0, first=1, second=2
  CHECK(g.slot_count == 3);
  CHECK(g.edges == Edges{{0, 1}, {1, 2}});
}

TEST_CASE("matches the naive interpreter on generated programs") {
  testing::ProgramGenerator gen(59);
  for (int i = 0; i < 120; ++i) {
    std::string program = gen.function();
    CAPTURE(program);
    SyntaxTree t = tree_of(program);
    CHECK(extract_dfg(t) == testing::naive_dfg(t));
  }
}

TEST_CASE("exact invariance under injective renaming, generated") {
  testing::ProgramGenerator gen(61);
  for (int i = 0; i < 60; ++i) {
    std::string program = gen.function();
    std::string renamed = testing::rename_identifiers(program);
    CAPTURE(program);
    CHECK(extract_dfg(tree_of(program)) == extract_dfg(tree_of(renamed)));
  }
}
