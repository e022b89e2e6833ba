#include "support/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace testsupport {

namespace {

using svcplan::kNoEdge;
using svcplan::Matrix;

void explore(const Matrix& adjacency, std::size_t source, std::size_t vertex,
             double cost, std::vector<char>& on_path, Matrix& best) {
  const std::size_t n = adjacency.size();
  for (std::size_t next = 0; next < n; ++next) {
    if (next == vertex || on_path[next]) {
      continue;
    }
    const double w = adjacency.at(vertex, next);
    if (w == kNoEdge) {
      continue;
    }
    const double reached = cost + w;
    if (reached < best.at(source, next)) {
      best.at(source, next) = reached;
    }
    on_path[next] = 1;
    explore(adjacency, source, next, reached, on_path, best);
    on_path[next] = 0;
  }
}

}  // namespace

Matrix brute_force_distances(const Matrix& adjacency) {
  const std::size_t n = adjacency.size();
  if (n > 12) {
    throw std::length_error("exhaustive oracle is capped at 12 vertices");
  }
  Matrix best(n, kNoEdge);
  std::vector<char> on_path(n, 0);
  for (std::size_t source = 0; source < n; ++source) {
    best.at(source, source) = 0.0;
    on_path[source] = 1;
    explore(adjacency, source, source, 0.0, on_path, best);
    on_path[source] = 0;
  }
  return best;
}

}  // namespace testsupport
