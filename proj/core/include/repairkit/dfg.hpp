#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "repairkit/ast.hpp"

namespace repairkit {

/// Normalized data-flow graph of a parse tree. Variables are numbered by
/// first appearance inside their function, which makes the graph invariant
/// under consistent renaming. Edges form a multiset, kept sorted.
struct DataFlowGraph {
  uint32_t slot_count = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges;  // (src, dst), sorted

  bool operator==(const DataFlowGraph& other) const = default;
};

/// Reaching-definitions scan over each function body (and over top-level
/// statements as an implicit body). An assignment or initialized declaration
/// `x = expr` adds one edge (slot(v), slot(x)) per read of a defined
/// variable v inside expr. if/else joins take the union of definitions;
/// loop bodies get one refinement pass (scanned twice); each read site emits
/// at most one edge.
DataFlowGraph extract_dfg(const SyntaxTree& tree);

}  // namespace repairkit
