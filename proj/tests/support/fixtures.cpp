#include "support/fixtures.hpp"

#include <cmath>

namespace testsupport {

std::string fixture_dir() { return FIXTURE_DIR; }

std::string fixture_path(const std::string& name) {
  return fixture_dir() + "/" + name;
}

const char* const kMatrix3Text =
    "0 5 inf 4 inf inf inf inf\n"
    "inf 0 inf 3 inf inf 1 1\n"
    "3 inf 0 inf 9 inf inf inf\n"
    "inf inf inf 0 inf inf inf 2\n"
    "inf inf inf inf 0 inf 1 inf\n"
    "inf inf inf inf 5 0 inf inf\n"
    "inf 8 inf inf inf 3 0 inf\n"
    "inf inf inf inf inf 1 inf 0\n";

const int kPublishedPred[8][8] = {
    {-1, 0, -1, 0, 2, 2, 1, 1},
    {-1, -1, -1, 1, 6, -1, 1, 1},
    {0, 0, -1, 0, 2, 6, 1, 1},
    {-1, -1, -1, -1, -1, -1, -1, 3},
    {-1, 6, -1, 6, -1, 6, 4, 6},
    {-1, 6, -1, 6, 5, -1, 4, 6},
    {-1, 6, -1, 1, 5, 6, -1, -1},
    {-1, -1, -1, -1, 5, 7, -1, -1},
};

const int kExpectedPred[8][8] = {
    {-1, 0, -1, 0, 5, 7, 1, 1},
    {-1, -1, -1, 1, 5, 7, 1, 1},
    {2, 0, -1, 0, 2, 7, 1, 1},
    {-1, 6, -1, -1, 5, 7, 4, 3},
    {-1, 6, -1, 1, -1, 6, 4, 1},
    {-1, 6, -1, 1, 5, -1, 4, 1},
    {-1, 6, -1, 1, 5, 6, -1, 1},
    {-1, 6, -1, 1, 5, 7, 4, -1},
};

bool published_entry_consistent(const svcplan::Matrix& dist,
                                const svcplan::Matrix& adjacency, std::size_t i,
                                std::size_t j, int entry) {
  if (entry < 0) {
    return i == j || dist.at(i, j) == svcplan::kNoEdge;
  }
  const auto k = static_cast<std::size_t>(entry);
  if (i == j || k == j || dist.at(i, j) == svcplan::kNoEdge) {
    return false;
  }
  const double w = adjacency.at(k, j);
  if (w == svcplan::kNoEdge) {
    return false;
  }
  const double via = dist.at(i, k);
  if (via == svcplan::kNoEdge) {
    return false;
  }
  return std::abs(via + w - dist.at(i, j)) <= 1e-9;
}

svcplan::RunConfig load_rcar_config(bool overlap) {
  const std::string name = overlap ? "rcar_config_overlap.json" : "rcar_config_raw.json";
  return svcplan::parse_config(svcplan::read_file(fixture_path(name)));
}

svcplan::PlannerModel load_rcar_model(bool overlap) {
  const auto hierarchy =
      svcplan::load_hierarchy(svcplan::read_file(fixture_path("rcar_hierarchy.json")));
  const auto registry = svcplan::load_registry(
      svcplan::read_file(fixture_path("rcar_registry.json")), hierarchy);
  const auto config = load_rcar_config(overlap);
  return svcplan::PlannerModel::build(registry, hierarchy, config.weights);
}

}  // namespace testsupport
