#include "svcplan/apsp.hpp"

#include <cmath>
#include <stdexcept>

#include "svcplan/errors.hpp"

namespace svcplan {

ApspTables floyd_warshall(const Matrix& adjacency, std::uint64_t built_from) {
  const std::size_t n = adjacency.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency.at(i, i) != 0.0) {
      throw ValidationError("adjacency diagonal must be zero at vertex " +
                            std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double w = adjacency.at(i, j);
      if (std::isnan(w) || w == -kNoEdge) {
        throw ValidationError("adjacency entry (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") is not a weight");
      }
    }
  }

  ApspTables tables;
  tables.n = n;
  tables.dist = adjacency;
  tables.pred_cells.assign(n * n, -1);
  tables.built_from = built_from;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && adjacency.at(i, j) != kNoEdge) {
        tables.pred_cells[i * n + j] = static_cast<std::int64_t>(i);
      }
    }
  }

  Matrix& dist = tables.dist;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double d_ik = dist.at(i, k);
      if (d_ik == kNoEdge) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        const double d_kj = dist.at(k, j);
        if (d_kj == kNoEdge) {
          continue;
        }
        const double through_k = d_ik + d_kj;
        if (through_k < dist.at(i, j)) {
          dist.at(i, j) = through_k;
          tables.pred_cells[i * n + j] = tables.pred_cells[k * n + j];
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (dist.at(i, i) < 0.0) {
      throw NegativeCycleError(i, "negative cycle through vertex " +
                                      std::to_string(i + 1));
    }
  }
  return tables;
}

std::optional<Path> get_path(const ApspTables& tables, const Matrix& adjacency,
                             std::size_t from, std::size_t to) {
  if (from >= tables.n || to >= tables.n) {
    throw ValidationError("path endpoints out of range");
  }
  if (from == to) {
    return Path{{from}, 0.0};
  }
  if (tables.dist.at(from, to) == kNoEdge) {
    return std::nullopt;
  }

  std::vector<std::size_t> reversed{to};
  std::size_t cur = to;
  while (cur != from) {
    const auto prev = tables.pred(from, cur);
    if (!prev || reversed.size() > tables.n) {
      throw std::logic_error("predecessor chain corrupt between vertices " +
                             std::to_string(from + 1) + " and " + std::to_string(to + 1));
    }
    cur = *prev;
    reversed.push_back(cur);
  }

  Path path;
  path.vertices.assign(reversed.rbegin(), reversed.rend());
  path.total_cost = tables.dist.at(from, to);

  double walked = 0.0;
  for (std::size_t step = 0; step + 1 < path.vertices.size(); ++step) {
    const double w = adjacency.at(path.vertices[step], path.vertices[step + 1]);
    if (w == kNoEdge) {
      throw std::logic_error("reconstructed path uses a missing edge");
    }
    walked += w;
  }
  if (std::abs(walked - path.total_cost) > 1e-9) {
    throw std::logic_error("reconstructed path cost disagrees with the distance table");
  }
  return path;
}

std::string format_pred(const ApspTables& tables) {
  std::string out;
  for (std::size_t i = 0; i < tables.n; ++i) {
    for (std::size_t j = 0; j < tables.n; ++j) {
      if (j != 0) {
        out += ' ';
      }
      const auto p = tables.pred(i, j);
      out += p ? std::to_string(*p + 1) : "null";
    }
    out += '\n';
  }
  return out;
}

}  // namespace svcplan
