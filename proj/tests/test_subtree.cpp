#include <doctest.h>

#include "repairkit/subtree.hpp"
#include "support/genprog.hpp"
#include "support/oracles.hpp"

using namespace repairkit;

namespace {

SyntaxTree tree_of(const std::string& text) {
  ParseOutcome outcome = parse_text(text);
  REQUIRE_FALSE(outcome.failed);
  return *outcome.tree;
}

size_t count_tall_nodes(const SyntaxNode& node, int min_height) {
  size_t n = subtree_height(node) >= static_cast<size_t>(min_height) ? 1 : 0;
  for (const auto& child : node.children) n += count_tall_nodes(child, min_height);
  return n;
}

}  // namespace

TEST_CASE("assignment statement decomposition") {
  SubtreeMultiset s = extract_subtrees(tree_of("a=1;"), 1);
  CHECK(s.at("(assign-expr ID LIT)") == 1);
  CHECK(s.at("(expr-stmt (assign-expr ID LIT))") == 1);  // statement wrapper
  CHECK(s.at("ID") == 1);
  CHECK(s.at("LIT") == 1);
}

TEST_CASE("single leaf tree with min_height 2 is empty") {
  SyntaxTree leaf_tree;
  leaf_tree.root.kind = node_kind::identifier;
  leaf_tree.root.leaf_lexeme = "x";
  leaf_tree.coverage = 1.0;
  CHECK(extract_subtrees(leaf_tree, 2).empty());
  CHECK(extract_subtrees(leaf_tree, 1).at("ID") == 1);
}

TEST_CASE("repeated structure counts with multiplicity") {
  SubtreeMultiset s = extract_subtrees(tree_of("a=1;b=1;"), 1);
  CHECK(s.at("(assign-expr ID LIT)") == 2);
}

TEST_CASE("operators and keywords keep their lexemes") {
  SubtreeMultiset s = extract_subtrees(tree_of("x = a + b;"), 1);
  CHECK(s.count("(binary-expr ID + ID)") == 1);
  SubtreeMultiset diff = extract_subtrees(tree_of("x = a - b;"), 1);
  CHECK(diff.count("(binary-expr ID + ID)") == 0);
  CHECK(diff.count("(binary-expr ID - ID)") == 1);
}

TEST_CASE("min_height filters short subtrees") {
  SyntaxTree t = tree_of("int f(){return 0;}");
  SubtreeMultiset all = extract_subtrees(t, 1);
  SubtreeMultiset tall = extract_subtrees(t, 3);
  CHECK(multiset_size(all) > multiset_size(tall));
  CHECK_THROWS(extract_subtrees(t, 0));
}

TEST_CASE("multiset size equals independent tall-node count") {
  testing::ProgramGenerator gen(31);
  for (int i = 0; i < 40; ++i) {
    SyntaxTree t = tree_of(gen.function());
    for (int h : {1, 2, 3, 5}) {
      CHECK(static_cast<size_t>(multiset_size(extract_subtrees(t, h))) ==
            count_tall_nodes(t.root, h));
    }
  }
}

TEST_CASE("extraction matches the naive enumeration") {
  testing::ProgramGenerator gen(37);
  for (int i = 0; i < 40; ++i) {
    SyntaxTree t = tree_of(gen.function());
    SubtreeMultiset fast = extract_subtrees(t, 1);
    std::vector<std::string> slow = testing::naive_subtree_list(t.root, 1);
    CHECK(static_cast<size_t>(multiset_size(fast)) == slow.size());
    SubtreeMultiset slow_as_multiset;
    for (const auto& item : slow) slow_as_multiset[item] += 1;
    CHECK(fast == slow_as_multiset);
  }
}

TEST_CASE("canonical strings are rename invariant") {
  testing::ProgramGenerator gen(41);
  for (int i = 0; i < 30; ++i) {
    std::string program = gen.function();
    SubtreeMultiset original = extract_subtrees(tree_of(program), 1);
    SubtreeMultiset renamed =
        extract_subtrees(tree_of(testing::rename_identifiers(program)), 1);
    CHECK(original == renamed);
  }
}

TEST_CASE("intersection counting") {
  SubtreeMultiset a = {{"x", 2}, {"y", 1}};
  SubtreeMultiset b = {{"x", 1}, {"z", 4}};
  CHECK(multiset_intersection_size(a, b) == 1);
  CHECK(multiset_intersection_size(a, a) == 3);
  CHECK(multiset_intersection_size(a, {}) == 0);
}
