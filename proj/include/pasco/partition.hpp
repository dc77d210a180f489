#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "pasco/coarsening_table.hpp"
#include "pasco/graph.hpp"

namespace pasco {

/// Hard assignment of N items to k clusters, stored as a 0-based label
/// array. Construction through from_labels compacts empty clusters away, so
/// a valid Partition always has every label in [0, k) used at least once.
struct Partition {
  std::vector<std::uint32_t> labels;
  std::uint32_t k{0};

  std::size_t size() const noexcept { return labels.size(); }

  /// Compacts raw labels to 0..k-1 in order of first appearance.
  static Partition from_labels(std::span<const std::uint32_t> raw);

  /// Canonical form: labels renumbered by first appearance. Two partitions
  /// describe the same grouping iff their canonical label arrays are equal.
  Partition canonical() const { return from_labels(labels); }

  std::vector<std::uint32_t> cluster_sizes() const;

  bool same_grouping_as(const Partition& other) const;
};

/// counts(i, j) = |items with p-label i and q-label j|, dense k x k'.
struct ContingencyTable {
  std::uint32_t rows{0};
  std::uint32_t cols{0};
  std::vector<std::int64_t> counts;  // row-major rows x cols
  std::vector<std::int64_t> row_sizes;
  std::vector<std::int64_t> col_sizes;
  std::int64_t total{0};

  std::int64_t at(std::uint32_t i, std::uint32_t j) const {
    return counts[static_cast<std::size_t>(i) * cols + j];
  }
};

ContingencyTable contingency(const Partition& p, const Partition& q);

/// Every source node inherits the cluster of its hypernode:
/// result.labels[i] = p.labels[table.map[i]].
Partition lift_partition(const Partition& p, const CoarseningTable& table);

// ---- partition text format: one line per item, `node_id cluster_id` -------

Partition read_partition(const std::filesystem::path& path,
                         std::span<const std::int64_t> node_ids = {});

void write_partition(const std::filesystem::path& path, const Partition& p,
                     std::span<const std::int64_t> node_ids = {});

}  // namespace pasco
