#include "pasco/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pasco {

WeightedGraph WeightedGraph::from_edges(std::span<const Edge> edges, NodeId n) {
  std::vector<std::tuple<NodeId, NodeId, double>> triplets;
  triplets.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (!(e.weight > 0.0)) {
      throw std::invalid_argument("edge weight must be positive");
    }
    if (e.u == e.v) {
      triplets.emplace_back(e.u, e.u, 2.0 * e.weight);
    } else {
      triplets.emplace_back(e.u, e.v, e.weight);
      triplets.emplace_back(e.v, e.u, e.weight);
    }
  }
  return from_symmetric_triplets(std::move(triplets), n);
}

WeightedGraph WeightedGraph::from_symmetric_triplets(
    std::vector<std::tuple<NodeId, NodeId, double>> triplets, NodeId n) {
  std::sort(triplets.begin(), triplets.end(),
            [](const auto& a, const auto& b) {
              return std::tie(std::get<0>(a), std::get<1>(a)) <
                     std::tie(std::get<0>(b), std::get<1>(b));
            });
  WeightedGraph g;
  g.n_ = n;
  g.row_ptr_.assign(n + 1, 0);
  g.cols_.reserve(triplets.size());
  g.weights_.reserve(triplets.size());

  std::size_t i = 0;
  for (NodeId u = 0; u < n; ++u) {
    g.row_ptr_[u] = g.cols_.size();
    while (i < triplets.size() && std::get<0>(triplets[i]) == u) {
      NodeId v = std::get<1>(triplets[i]);
      double w = 0.0;
      while (i < triplets.size() && std::get<0>(triplets[i]) == u &&
             std::get<1>(triplets[i]) == v) {
        w += std::get<2>(triplets[i]);
        ++i;
      }
      if (w != 0.0) {
        g.cols_.push_back(v);
        g.weights_.push_back(w);
      }
    }
  }
  g.row_ptr_[n] = g.cols_.size();
  g.finalize();
  return g;
}

void WeightedGraph::finalize() {
  diag_.assign(n_, npos);
  degrees_.assign(n_, 0.0);
  total_weight_ = 0.0;
  for (NodeId u = 0; u < n_; ++u) {
    double d = 0.0;
    for (std::size_t i = row_ptr_[u]; i < row_ptr_[u + 1]; ++i) {
      d += weights_[i];
      if (cols_[i] == u) diag_[u] = i;
    }
    degrees_[u] = d;
    total_weight_ += d;
  }
}

double WeightedGraph::loop_weight(NodeId u) const {
  return diag_[u] == npos ? 0.0 : weights_[diag_[u]];
}

std::span<const NodeId> WeightedGraph::row_cols(NodeId u) const {
  return {cols_.data() + row_ptr_[u], row_ptr_[u + 1] - row_ptr_[u]};
}

std::span<const double> WeightedGraph::row_weights(NodeId u) const {
  return {weights_.data() + row_ptr_[u], row_ptr_[u + 1] - row_ptr_[u]};
}

std::size_t WeightedGraph::nonloop_neighbor_count(NodeId u) const {
  std::size_t len = row_ptr_[u + 1] - row_ptr_[u];
  return diag_[u] == npos ? len : len - 1;
}

NodeId WeightedGraph::nonloop_neighbor_at(NodeId u, std::size_t idx) const {
  std::size_t pos = row_ptr_[u] + idx;
  if (diag_[u] != npos && pos >= diag_[u]) ++pos;  // skip the diagonal slot
  return cols_[pos];
}

std::size_t WeightedGraph::nonloop_edge_count() const {
  std::size_t loops = 0;
  for (NodeId u = 0; u < n_; ++u) {
    if (diag_[u] != npos) ++loops;
  }
  return (cols_.size() - loops) / 2;
}

std::vector<Edge> WeightedGraph::nonloop_edges() const {
  std::vector<Edge> edges;
  edges.reserve(nonloop_edge_count());
  for (NodeId u = 0; u < n_; ++u) {
    for (std::size_t i = row_ptr_[u]; i < row_ptr_[u + 1]; ++i) {
      if (cols_[i] > u) edges.push_back({u, cols_[i], weights_[i]});
    }
  }
  return edges;
}

bool WeightedGraph::connected() const {
  if (n_ == 0) return false;
  std::vector<NodeId> stack{0};
  std::vector<char> seen(n_, 0);
  seen[0] = 1;
  NodeId reached = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : row_cols(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n_;
}

WeightedGraph build_graph(std::span<const Edge> edges, NodeId n) {
  return WeightedGraph::from_edges(edges, n);
}

namespace {

bool parse_edge_line(const std::string& line, std::int64_t& u, std::int64_t& v,
                     double& w) {
  std::string_view sv(line);
  std::size_t hash = sv.find('#');
  if (hash != std::string_view::npos) sv = sv.substr(0, hash);
  std::string body(sv);
  std::istringstream in(body);
  if (!(in >> u)) return false;  // blank / comment-only line
  if (!(in >> v)) throw std::runtime_error("malformed edge line: " + line);
  w = 1.0;
  in >> w;
  return true;
}

}  // namespace

LoadedGraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());

  std::vector<std::tuple<std::int64_t, std::int64_t, double>> raw;
  std::string line;
  while (std::getline(in, line)) {
    std::int64_t u, v;
    double w;
    if (parse_edge_line(line, u, v, w)) raw.emplace_back(u, v, w);
  }

  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  for (const auto& [u, v, w] : raw) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  auto index_of = [&ids](std::int64_t id) {
    return static_cast<NodeId>(
        std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v, w] : raw) {
    edges.push_back({index_of(u), index_of(v), w});
  }
  LoadedGraph out;
  out.graph = build_graph(edges, static_cast<NodeId>(ids.size()));
  out.node_ids = std::move(ids);
  return out;
}

void write_edge_list(const std::filesystem::path& path, const WeightedGraph& g,
                     std::span<const std::int64_t> node_ids) {
  if (!node_ids.empty() && node_ids.size() != g.num_nodes()) {
    throw std::invalid_argument("node id list does not match graph size");
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.precision(17);
  auto ext = [&node_ids](NodeId u) -> std::int64_t {
    return node_ids.empty() ? static_cast<std::int64_t>(u) : node_ids[u];
  };
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    auto cols = g.row_cols(u);
    auto wts = g.row_weights(u);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (cols[i] < u) continue;
      double w = (cols[i] == u) ? wts[i] / 2.0 : wts[i];
      out << ext(u) << ' ' << ext(cols[i]) << ' ' << w << '\n';
    }
  }
}

}  // namespace pasco
