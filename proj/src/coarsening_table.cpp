#include "pasco/coarsening_table.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace pasco {

CoarseningTable CoarseningTable::identity(NodeId n) {
  CoarseningTable t;
  t.map.resize(n);
  std::iota(t.map.begin(), t.map.end(), NodeId{0});
  t.n_dst = n;
  return t;
}

void CoarseningTable::validate() const {
  std::vector<char> hit(n_dst, 0);
  for (NodeId h : map) {
    if (h >= n_dst) throw std::invalid_argument("table entry out of range");
    hit[h] = 1;
  }
  for (NodeId a = 0; a < n_dst; ++a) {
    if (!hit[a]) throw std::invalid_argument("table is not surjective");
  }
}

CoarseningTable relabel_consecutive(std::span<const NodeId> raw) {
  if (raw.empty()) throw std::invalid_argument("cannot relabel an empty array");
  CoarseningTable t;
  t.map.reserve(raw.size());
  std::unordered_map<NodeId, NodeId> remap;
  remap.reserve(raw.size());
  for (NodeId v : raw) {
    auto [it, inserted] = remap.try_emplace(v, static_cast<NodeId>(remap.size()));
    t.map.push_back(it->second);
  }
  t.n_dst = static_cast<NodeId>(remap.size());
  return t;
}

CoarseningTable compose_tables(const CoarseningTable& outer,
                               const CoarseningTable& inner) {
  if (outer.n_dst != inner.n_src()) {
    throw std::invalid_argument("table composition size mismatch");
  }
  CoarseningTable t;
  t.map.resize(outer.map.size());
  for (std::size_t i = 0; i < outer.map.size(); ++i) {
    t.map[i] = inner.map[outer.map[i]];
  }
  t.n_dst = inner.n_dst;
  return t;
}

WeightedGraph coarsen_adjacency(const WeightedGraph& g,
                                const CoarseningTable& table) {
  if (table.n_src() != g.num_nodes()) {
    throw std::invalid_argument("table does not match graph size");
  }
  std::vector<std::tuple<NodeId, NodeId, double>> triplets;
  triplets.reserve(g.stored_entries());
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    auto cols = g.row_cols(u);
    auto wts = g.row_weights(u);
    NodeId a = table.map[u];
    for (std::size_t i = 0; i < cols.size(); ++i) {
      triplets.emplace_back(a, table.map[cols[i]], wts[i]);
    }
  }
  return WeightedGraph::from_symmetric_triplets(std::move(triplets),
                                                table.n_dst);
}

}  // namespace pasco
