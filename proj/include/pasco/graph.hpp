// Sparse symmetric weighted graph with self-loops, shared by all stages of
// the coarsen / cluster / fuse pipeline.
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace pasco {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u{0};
  NodeId v{0};
  double weight{1.0};
};

/// Undirected weighted graph stored as sorted symmetric CSR.
///
/// Convention: the stored diagonal entry A(u,u) holds TWICE the internal
/// (self-loop) weight of u. With that, degree(u) is the plain row sum,
/// degrees are additive under contraction, and total_weight() == 1'A1 == 2m
/// is invariant across coarsening levels.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Accumulating builder. Duplicate (u,v) edges sum; an input self-loop
  /// (u,u,w) is stored as A(u,u) = 2w. Throws on out-of-range endpoints or
  /// non-positive weight.
  static WeightedGraph from_edges(std::span<const Edge> edges, NodeId n);

  /// Builds from raw triplets, already including both (u,v) and (v,u) for
  /// off-diagonal entries and the doubled value on the diagonal. Duplicates
  /// accumulate. Used internally by contraction.
  static WeightedGraph from_symmetric_triplets(
      std::vector<std::tuple<NodeId, NodeId, double>> triplets, NodeId n);

  NodeId num_nodes() const noexcept { return n_; }
  std::size_t stored_entries() const noexcept { return cols_.size(); }

  /// Row sum of row u (self-loop diagonal included, already doubled).
  double degree(NodeId u) const noexcept { return degrees_[u]; }

  /// 1'A1 == 2m.
  double total_weight() const noexcept { return total_weight_; }

  /// Stored diagonal entry (zero when absent).
  double loop_weight(NodeId u) const;

  std::span<const NodeId> row_cols(NodeId u) const;
  std::span<const double> row_weights(NodeId u) const;

  /// Number of distinct neighbors of u, excluding u itself.
  std::size_t nonloop_neighbor_count(NodeId u) const;

  /// idx-th non-loop neighbor of u, 0 <= idx < nonloop_neighbor_count(u).
  NodeId nonloop_neighbor_at(NodeId u, std::size_t idx) const;

  /// Total number of non-loop edges counting each unordered pair once.
  std::size_t nonloop_edge_count() const;

  /// All non-loop edges as (u, v, w) with u < v.
  std::vector<Edge> nonloop_edges() const;

  bool connected() const;

 private:
  NodeId n_{0};
  std::vector<std::size_t> row_ptr_;
  std::vector<NodeId> cols_;     // sorted within each row
  std::vector<double> weights_;
  std::vector<std::size_t> diag_;  // index into cols_ per row, npos if absent
  std::vector<double> degrees_;
  double total_weight_{0.0};

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  void finalize();
};

/// build_graph of the public API: 0-based endpoints in [0, n).
WeightedGraph build_graph(std::span<const Edge> edges, NodeId n);

// ---- edge-list text format -------------------------------------------------
//
// One edge per line: `u v [w]`, whitespace separated, weight defaults to 1,
// `#` starts a comment line, blank lines ignored. Node identifiers are
// arbitrary non-negative integers; the graph's internal indices follow the
// sorted order of the identifiers seen in the file.

struct LoadedGraph {
  WeightedGraph graph;
  std::vector<std::int64_t> node_ids;  // internal index -> original id
};

LoadedGraph read_edge_list(const std::filesystem::path& path);

/// Writes `u v w` lines, one per unordered pair (u <= v); a self-loop line
/// carries half the stored diagonal so that read-back reproduces the graph.
/// `node_ids` maps internal indices to external identifiers; pass empty to
/// use 0-based indices.
void write_edge_list(const std::filesystem::path& path, const WeightedGraph& g,
                     std::span<const std::int64_t> node_ids = {});

}  // namespace pasco
