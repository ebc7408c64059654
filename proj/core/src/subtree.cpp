#include "repairkit/subtree.hpp"

#include <algorithm>

#include "repairkit/error.hpp"

namespace repairkit {

namespace {

void canonical_into(const SyntaxNode& node, std::string& out) {
  if (node.is_leaf()) {
    if (node.kind == node_kind::identifier) {
      out += "ID";
    } else if (node.kind == node_kind::literal) {
      out += "LIT";
    } else {
      out += node.leaf_lexeme;
    }
    return;
  }
  out += '(';
  out += node.kind;
  for (const auto& child : node.children) {
    out += ' ';
    canonical_into(child, out);
  }
  out += ')';
}

size_t collect(const SyntaxNode& node, int min_height, SubtreeMultiset& out) {
  size_t height = 1;
  for (const auto& child : node.children) {
    height = std::max(height, 1 + collect(child, min_height, out));
  }
  if (height >= static_cast<size_t>(min_height)) {
    out[canonical_form(node)] += 1;
  }
  return height;
}

}  // namespace

std::string canonical_form(const SyntaxNode& node) {
  std::string out;
  canonical_into(node, out);
  return out;
}

size_t subtree_height(const SyntaxNode& node) {
  size_t height = 1;
  for (const auto& child : node.children) {
    height = std::max(height, 1 + subtree_height(child));
  }
  return height;
}

SubtreeMultiset extract_subtrees(const SyntaxTree& tree, int min_height) {
  if (min_height < 1)
    throw Error(ErrorCode::invalid_input, "min_height must be >= 1");
  SubtreeMultiset out;
  collect(tree.root, min_height, out);
  return out;
}

long multiset_size(const SubtreeMultiset& s) {
  long total = 0;
  for (const auto& [key, count] : s) total += count;
  return total;
}

long multiset_intersection_size(const SubtreeMultiset& a,
                                const SubtreeMultiset& b) {
  const SubtreeMultiset& small = a.size() <= b.size() ? a : b;
  const SubtreeMultiset& large = a.size() <= b.size() ? b : a;
  long total = 0;
  for (const auto& [key, count] : small) {
    auto it = large.find(key);
    if (it != large.end()) total += std::min(count, it->second);
  }
  return total;
}

}  // namespace repairkit
