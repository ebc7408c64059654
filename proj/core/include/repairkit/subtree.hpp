#pragma once

#include <map>
#include <string>

#include "repairkit/ast.hpp"

namespace repairkit {

/// Multiset of canonical subtree strings, value = multiplicity.
using SubtreeMultiset = std::map<std::string, long>;

/// Canonical serialization of one node: pre-order "(kind child1 child2 ...)".
/// Identifier leaves become "ID", literal leaves "LIT"; keyword and operator
/// leaves keep their lexeme, so renaming variables cannot change the result.
std::string canonical_form(const SyntaxNode& node);

/// Height of a subtree; a leaf has height 1.
size_t subtree_height(const SyntaxNode& node);

/// Every node whose subtree height is >= min_height contributes its
/// canonical form, with multiplicity. min_height must be >= 1.
SubtreeMultiset extract_subtrees(const SyntaxTree& tree, int min_height);

/// Total multiplicity across the multiset.
long multiset_size(const SubtreeMultiset& s);

/// Sum over keys of min(multiplicity in a, multiplicity in b).
long multiset_intersection_size(const SubtreeMultiset& a,
                                const SubtreeMultiset& b);

}  // namespace repairkit
