#include "svcplan/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "svcplan/apsp.hpp"
#include "svcplan/errors.hpp"

namespace svcplan {

Matrix random_adjacency(std::uint64_t seed, std::size_t n, double density,
                        int max_weight) {
  if (n == 0) {
    throw ValidationError("random graph needs at least one vertex");
  }
  if (density < 0.0 || density > 1.0) {
    throw ValidationError("edge density must lie in [0, 1]");
  }
  if (max_weight < 1) {
    throw ValidationError("maximum edge weight must be at least 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> weight(1, max_weight);

  Matrix adjacency(n, kNoEdge);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        adjacency.at(i, j) = 0.0;
        continue;
      }
      if (coin(rng) < density) {
        adjacency.at(i, j) = static_cast<double>(weight(rng));
      }
    }
  }
  return adjacency;
}

Matrix dijkstra_all_pairs(const Matrix& adjacency) {
  const std::size_t n = adjacency.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double w = adjacency.at(i, j);
      if (w != kNoEdge && w < 0.0) {
        throw ValidationError("single-source baseline requires non-negative weights");
      }
    }
  }

  // Forward adjacency lists once, reused by every source.
  std::vector<std::vector<std::pair<std::size_t, double>>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && adjacency.at(i, j) != kNoEdge) {
        out[i].emplace_back(j, adjacency.at(i, j));
      }
    }
  }

  Matrix dist(n, kNoEdge);
  using Item = std::pair<double, std::size_t>;  // (distance, vertex)
  for (std::size_t source = 0; source < n; ++source) {
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist.at(source, source) = 0.0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
      const auto [d, v] = heap.top();
      heap.pop();
      if (d > dist.at(source, v)) {
        continue;  // stale entry
      }
      for (const auto& [u, w] : out[v]) {
        const double candidate = d + w;
        if (dist.at(source, u) == kNoEdge || candidate < dist.at(source, u)) {
          dist.at(source, u) = candidate;
          heap.emplace(candidate, u);
        }
      }
    }
  }
  return dist;
}

BenchRow run_bench_case(std::size_t n, std::uint64_t seed, double density,
                        int repetitions) {
  if (repetitions < 1) {
    throw ValidationError("benchmark needs at least one repetition");
  }
  const Matrix adjacency = random_adjacency(seed, n, density, 10);

  BenchRow row;
  row.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && adjacency.at(i, j) != kNoEdge) {
        ++row.edges;
      }
    }
  }

  using Clock = std::chrono::steady_clock;
  double best_floyd = std::numeric_limits<double>::infinity();
  double best_sssp = std::numeric_limits<double>::infinity();
  Matrix floyd_dist;
  Matrix sssp_dist;
  for (int rep = 0; rep < repetitions; ++rep) {
    const auto t0 = Clock::now();
    ApspTables tables = floyd_warshall(adjacency);
    const auto t1 = Clock::now();
    sssp_dist = dijkstra_all_pairs(adjacency);
    const auto t2 = Clock::now();
    floyd_dist = std::move(tables.dist);

    const double floyd_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double sssp_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    best_floyd = std::min(best_floyd, floyd_ms);
    best_sssp = std::min(best_sssp, sssp_ms);
  }

  if (!(floyd_dist == sssp_dist)) {
    throw std::logic_error("all-pairs strategies disagree on the benchmark graph");
  }
  row.floyd_ms = best_floyd;
  row.sssp_all_ms = best_sssp;
  return row;
}

std::string format_bench_row(const BenchRow& row) {
  std::ostringstream out;
  out << "n=" << row.n << " edges=" << row.edges << " floyd_ms=" << row.floyd_ms
      << " sssp_all_ms=" << row.sssp_all_ms;
  return out.str();
}

}  // namespace svcplan
