#pragma once

#include <string>
#include <vector>

#include "repairkit/ast.hpp"
#include "repairkit/dfg.hpp"
#include "repairkit/token.hpp"

namespace repairkit::testing {

// Independent reference implementations the optimized code is checked
// against. Deliberately naive: plain lists, quadratic matching, recursion.

// All canonical subtree strings of nodes with height >= min_height, with
// repeats, via a from-scratch serializer.
std::vector<std::string> naive_subtree_list(const SyntaxNode& root,
                                            int min_height);

// Quadratic multiset intersection count between two string lists.
long naive_intersection_count(std::vector<std::string> a,
                              const std::vector<std::string>& b);

// |S(cand) ∩ S(ref)| / |S(ref)| with the empty-reference conventions.
double naive_sim_ast(const SyntaxTree& cand, const SyntaxTree& ref,
                     int min_height);

// Reaching-definitions interpreter written against the same documented
// semantics but with its own structure (name-keyed environment).
DataFlowGraph naive_dfg(const SyntaxTree& tree);

// Direct BLEU evaluation with map<vector<lexeme>, count> n-gram tables.
double naive_bleu(const std::vector<Token>& cand, const std::vector<Token>& ref,
                  int max_ngram, double epsilon);

// Changed/deleted line indices (0-based) of `a` against `b` from a
// backward-walk LCS, as an alignment cross-check for unambiguous fixtures.
std::vector<size_t> naive_changed_lines(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b);

}  // namespace repairkit::testing
