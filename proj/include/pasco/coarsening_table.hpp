#pragma once

#include <span>
#include <vector>

#include "pasco/graph.hpp"

namespace pasco {

/// Map from source nodes to hypernodes of a smaller graph. Entries are
/// 0-based hypernode indices; relabel_consecutive guarantees surjectivity.
struct CoarseningTable {
  std::vector<NodeId> map;  // size n_src, entries in [0, n_dst)
  NodeId n_dst{0};

  NodeId n_src() const noexcept { return static_cast<NodeId>(map.size()); }

  static CoarseningTable identity(NodeId n);

  /// Throws unless every entry is < n_dst and every hypernode is hit.
  void validate() const;
};

/// Remaps arbitrary labels to 0..n_dst-1 in order of first appearance.
/// Grouping is preserved: i and j share a label iff they did before.
CoarseningTable relabel_consecutive(std::span<const NodeId> raw);

/// Composition: `outer` maps A -> B, `inner` maps B -> C, result maps A -> C
/// with result[i] = inner[outer[i]].
CoarseningTable compose_tables(const CoarseningTable& outer,
                               const CoarseningTable& inner);

/// Contracted adjacency: entry (a, b) accumulates A(u, v) over all u, v with
/// table[u] == a, table[v] == b. Total weight is conserved exactly up to
/// floating-point summation order.
WeightedGraph coarsen_adjacency(const WeightedGraph& g,
                                const CoarseningTable& table);

/// Per-level tables from the original graph down to the final one, plus the
/// precomposed shortcut.
struct CoarseningChain {
  std::vector<CoarseningTable> levels;
  CoarseningTable composed;
};

}  // namespace pasco
