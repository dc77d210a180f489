// Randomized multilevel edge-contraction coarsening.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "pasco/coarsening_table.hpp"
#include "pasco/graph.hpp"
#include "pasco/partition.hpp"

namespace pasco {

enum class SamplingRule {
  UniformNodeUnvisited,   // default: u uniform among unvisited, v uniform neighbor
  UniformEdge,            // uniform over edges still joining distinct hypernodes
  UniformEdgeMarkedEdges, // uniform over edges with both endpoints untouched
  DegreeNodeMarkedNodes,  // u drawn proportional to degree among unvisited
  HeavyEdgeBaseline,      // greedy matching by descending edge weight
};

const char* to_string(SamplingRule rule);
SamplingRule sampling_rule_from_string(const std::string& name);

struct CoarseningConfig {
  double rho{10.0};  // target size n = floor(N / rho)
  SamplingRule rule{SamplingRule::UniformNodeUnvisited};
  std::uint64_t seed{0};
  std::uint32_t max_levels{50};
};

enum class CoarseningStop {
  ReachedTarget,
  Stalled,     // a level produced no contraction
  MaxLevels,
};

struct CoarseningResult {
  WeightedGraph graph;
  CoarseningChain chain;
  std::uint32_t levels_used{0};
  CoarseningStop stop{CoarseningStop::ReachedTarget};
  // Contractions classified against a reference partition, when one was
  // supplied: endpoints' node sets agreeing / disagreeing on their majority
  // reference label (ties count as disagreement).
  std::uint64_t intra_contractions{0};
  std::uint64_t inter_contractions{0};
};

/// Disjoint sets with size tracking; used to maintain hypernodes while a
/// level is being sampled.
class UnionFind {
 public:
  explicit UnionFind(NodeId n);
  NodeId find(NodeId x) const;
  bool unite(NodeId a, NodeId b);  // false when already in the same set
  NodeId set_count() const noexcept { return count_; }
  NodeId set_size(NodeId root) const { return size_[root]; }

 private:
  mutable std::vector<NodeId> parent_;
  std::vector<NodeId> size_;
  NodeId count_;
};

/// Draws contraction pairs for one level under a fixed rule. next() consumes
/// availability state (visited marks, candidate edges) and returns nullopt
/// when the rule has no admissible pair left.
class ContractionSampler {
 public:
  ContractionSampler(const WeightedGraph& g, SamplingRule rule);
  std::optional<std::pair<NodeId, NodeId>> next(const UnionFind& uf,
                                                std::mt19937_64& rng);

 private:
  const WeightedGraph& g_;
  SamplingRule rule_;
  // node-based rules
  std::vector<NodeId> available_;
  std::vector<std::size_t> pos_;  // node -> index into available_, npos if gone
  std::vector<double> fenwick_;   // degree-weighted draw support
  double fenwick_total_{0.0};
  // edge-based rules
  std::vector<Edge> edges_;
  std::vector<char> marked_;
  std::size_t scan_{0};  // heavy-edge scan cursor

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  void remove_available(NodeId u);
  void fenwick_add(NodeId i, double delta);
  NodeId fenwick_sample(double target) const;
};

/// One contraction level: repeatedly draws (u, v) under `rule`, merges u into
/// v's hypernode, and stops once the live hypernode count reaches `target`
/// or the rule is exhausted. Returns the relabeled table and the contracted
/// graph. `on_merge(root_u, root_v)` fires for every effective merge.
std::pair<CoarseningTable, WeightedGraph> coarsen_one_level(
    const WeightedGraph& g, NodeId target, SamplingRule rule,
    std::mt19937_64& rng,
    const std::function<void(NodeId, NodeId)>& on_merge = {});

/// Multilevel driver: contracts until floor(N/rho) nodes remain, a level
/// stalls, or max_levels is hit. When `truth` is given, every contraction is
/// classified as intra or inter against it.
CoarseningResult coarsen_to_target(const WeightedGraph& g,
                                   const CoarseningConfig& cfg,
                                   const Partition* truth = nullptr);

std::pair<std::uint64_t, std::uint64_t> intra_inter_contraction_counts(
    const CoarseningResult& result);

}  // namespace pasco
