#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svcplan/matrix.hpp"

namespace svcplan {

// Publish-time product of the all-pairs run: the distance matrix plus, for
// every reachable pair (i,j) with i != j, the direct predecessor of j on a
// least-cost path from i (the shortest predecessor matrix).
struct ApspTables {
  std::size_t n = 0;
  Matrix dist;
  std::vector<std::int64_t> pred_cells;  // row-major, -1 marks "none"
  std::uint64_t built_from = 0;

  std::optional<std::size_t> pred(std::size_t i, std::size_t j) const {
    const std::int64_t cell = pred_cells[i * n + j];
    if (cell < 0) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(cell);
  }

  bool operator==(const ApspTables&) const = default;
};

// Dynamic-programming all-pairs shortest paths with predecessor tracking.
// Relaxation is strict (<) with intermediate vertices taken in ascending
// index order, so the first-discovered equal-cost path is kept. Negative
// edges are accepted; a negative cycle is a hard error.
ApspTables floyd_warshall(const Matrix& adjacency, std::uint64_t built_from = 0);

struct Path {
  std::vector<std::size_t> vertices;  // source..target inclusive
  double total_cost = 0.0;

  bool operator==(const Path&) const = default;
};

// Reconstructs the least-cost path by walking the predecessor chain back
// from the target. Returns nullopt when the target is unreachable; for
// i == j the path is the single vertex with cost 0. The adjacency matrix is
// used to cross-check that the reconstruction follows real edges.
std::optional<Path> get_path(const ApspTables& tables, const Matrix& adjacency,
                             std::size_t from, std::size_t to);

// Predecessor matrix rendered one row per source, entries as 1-based vertex
// numbers with "null" marking absent predecessors.
std::string format_pred(const ApspTables& tables);

}  // namespace svcplan
