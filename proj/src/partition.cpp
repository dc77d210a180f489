#include "pasco/partition.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pasco {

Partition Partition::from_labels(std::span<const std::uint32_t> raw) {
  if (raw.empty()) throw std::invalid_argument("empty partition");
  Partition p;
  p.labels.reserve(raw.size());
  std::unordered_map<std::uint32_t, std::uint32_t> remap;
  for (std::uint32_t v : raw) {
    auto [it, inserted] =
        remap.try_emplace(v, static_cast<std::uint32_t>(remap.size()));
    p.labels.push_back(it->second);
  }
  p.k = static_cast<std::uint32_t>(remap.size());
  return p;
}

std::vector<std::uint32_t> Partition::cluster_sizes() const {
  std::vector<std::uint32_t> sizes(k, 0);
  for (std::uint32_t l : labels) ++sizes[l];
  return sizes;
}

bool Partition::same_grouping_as(const Partition& other) const {
  if (labels.size() != other.labels.size()) return false;
  return canonical().labels == other.canonical().labels;
}

ContingencyTable contingency(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("partitions differ in size");
  }
  ContingencyTable t;
  t.rows = p.k;
  t.cols = q.k;
  t.counts.assign(static_cast<std::size_t>(p.k) * q.k, 0);
  t.row_sizes.assign(p.k, 0);
  t.col_sizes.assign(q.k, 0);
  t.total = static_cast<std::int64_t>(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::uint32_t a = p.labels[i];
    std::uint32_t b = q.labels[i];
    ++t.counts[static_cast<std::size_t>(a) * t.cols + b];
    ++t.row_sizes[a];
    ++t.col_sizes[b];
  }
  return t;
}

Partition lift_partition(const Partition& p, const CoarseningTable& table) {
  if (p.size() != table.n_dst) {
    throw std::invalid_argument("partition does not match table target size");
  }
  std::vector<std::uint32_t> lifted(table.n_src());
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    lifted[i] = p.labels[table.map[i]];
  }
  return Partition::from_labels(lifted);
}

Partition read_partition(const std::filesystem::path& path,
                         std::span<const std::int64_t> node_ids) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::pair<std::int64_t, std::uint32_t>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::int64_t node;
    std::uint32_t cluster;
    if (!(ls >> node)) continue;
    if (!(ls >> cluster)) {
      throw std::runtime_error("malformed partition line: " + line);
    }
    rows.emplace_back(node, cluster);
  }
  if (rows.empty()) throw std::runtime_error("empty partition file");

  std::vector<std::uint32_t> labels(rows.size());
  if (node_ids.empty()) {
    // Node ids must then be exactly 0..N-1.
    std::vector<char> seen(rows.size(), 0);
    for (const auto& [node, cluster] : rows) {
      if (node < 0 || node >= static_cast<std::int64_t>(rows.size()) ||
          seen[node]) {
        throw std::runtime_error("partition file node ids are not 0..N-1");
      }
      seen[node] = 1;
      labels[node] = cluster;
    }
  } else {
    if (rows.size() != node_ids.size()) {
      throw std::runtime_error("partition file does not cover all nodes");
    }
    std::vector<char> seen(node_ids.size(), 0);
    for (const auto& [node, cluster] : rows) {
      auto it = std::lower_bound(node_ids.begin(), node_ids.end(), node);
      if (it == node_ids.end() || *it != node) {
        throw std::runtime_error("partition file references unknown node");
      }
      std::size_t idx = static_cast<std::size_t>(it - node_ids.begin());
      if (seen[idx]) throw std::runtime_error("duplicate node in partition");
      seen[idx] = 1;
      labels[idx] = cluster;
    }
  }
  return Partition::from_labels(labels);
}

void write_partition(const std::filesystem::path& path, const Partition& p,
                     std::span<const std::int64_t> node_ids) {
  if (!node_ids.empty() && node_ids.size() != p.size()) {
    throw std::invalid_argument("node id list does not match partition size");
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::int64_t id =
        node_ids.empty() ? static_cast<std::int64_t>(i) : node_ids[i];
    out << id << ' ' << p.labels[i] << '\n';
  }
}

}  // namespace pasco
