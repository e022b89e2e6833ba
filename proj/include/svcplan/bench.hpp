#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "svcplan/matrix.hpp"

namespace svcplan {

// Seeded random adjacency over n vertices: each ordered pair (i, j), i != j,
// carries an edge with the given probability, integer weight in
// [1, max_weight]. The same seed always yields the same matrix.
Matrix random_adjacency(std::uint64_t seed, std::size_t n, double density,
                        int max_weight);

// All-pairs distances by running a binary-heap single-source pass from every
// vertex; independent baseline for cross-checks and timing comparisons.
// Requires non-negative weights.
Matrix dijkstra_all_pairs(const Matrix& adjacency);

struct BenchRow {
  std::size_t n = 0;
  std::size_t edges = 0;
  double floyd_ms = 0.0;     // one full dynamic-programming pass
  double sssp_all_ms = 0.0;  // n single-source passes
};

// Best-of-`repetitions` wall time for both all-pairs strategies on the same
// random graph; also verifies they agree before reporting.
BenchRow run_bench_case(std::size_t n, std::uint64_t seed, double density,
                        int repetitions = 3);

std::string format_bench_row(const BenchRow& row);

}  // namespace svcplan
