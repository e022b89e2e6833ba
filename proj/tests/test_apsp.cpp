#include <doctest.h>

#include <cmath>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "svcplan/apsp.hpp"
#include "svcplan/bench.hpp"
#include "svcplan/errors.hpp"

using namespace svcplan;

namespace {

Matrix fixture_matrix() { return Matrix::parse(testsupport::kMatrix3Text); }

}  // namespace

TEST_CASE("matrix text parses and renders byte-identically") {
  const Matrix m = fixture_matrix();
  CHECK(m.size() == 8);
  CHECK(m.at(0, 1) == 5.0);
  CHECK(m.at(0, 2) == kNoEdge);
  CHECK(m.to_text() == testsupport::kMatrix3Text);

  CHECK_THROWS_AS(Matrix::parse("0 1\n2\n"), ValidationError);
  CHECK_THROWS_AS(Matrix::parse("0 nan\ninf 0\n"), ValidationError);
  CHECK_THROWS_AS(Matrix::parse(""), ValidationError);
}

TEST_CASE("distances on the fixture matrix hit the known values") {
  const ApspTables tables = floyd_warshall(fixture_matrix());
  CHECK(tables.dist.at(0, 1) == 5.0);   // V1 -> V2
  CHECK(tables.dist.at(0, 3) == 4.0);   // V1 -> V4
  CHECK(tables.dist.at(0, 6) == 6.0);   // V1 -> V7
  CHECK(tables.dist.at(0, 7) == 6.0);   // V1 -> V8
  CHECK(tables.dist.at(0, 5) == 7.0);   // V1 -> V6
  CHECK(tables.dist.at(0, 4) == 12.0);  // V1 -> V5
  CHECK(tables.dist.at(4, 3) == 12.0);  // V5 -> V4
  CHECK(tables.dist.at(3, 2) == kNoEdge);  // V4 -> V3, no incoming edges to V3
}

TEST_CASE("distances agree with the exhaustive oracle on every entry") {
  const Matrix adjacency = fixture_matrix();
  const ApspTables tables = floyd_warshall(adjacency);
  const Matrix oracle = testsupport::brute_force_distances(adjacency);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      CHECK(tables.dist.at(i, j) == oracle.at(i, j));
    }
  }
}

TEST_CASE("predecessors match the frozen expectation") {
  const ApspTables tables = floyd_warshall(fixture_matrix());
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const int expected = testsupport::kExpectedPred[i][j];
      if (expected < 0) {
        CHECK(tables.pred(i, j) == std::nullopt);
      } else {
        CHECK(tables.pred(i, j) == static_cast<std::size_t>(expected));
      }
    }
  }
}

TEST_CASE("predecessor entries satisfy their defining equation") {
  const Matrix adjacency = fixture_matrix();
  const ApspTables tables = floyd_warshall(adjacency);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const auto k = tables.pred(i, j);
      if (i == j || tables.dist.at(i, j) == kNoEdge) {
        CHECK(k == std::nullopt);
        continue;
      }
      REQUIRE(k.has_value());
      CHECK(*k != j);
      REQUIRE(adjacency.at(*k, j) != kNoEdge);
      CHECK(std::abs(tables.dist.at(i, *k) + adjacency.at(*k, j) -
                     tables.dist.at(i, j)) <= 1e-9);
    }
  }
}

TEST_CASE("published predecessor matrix: consistent entries agree, errata are real") {
  const Matrix adjacency = fixture_matrix();
  const ApspTables tables = floyd_warshall(adjacency);
  const Matrix oracle = testsupport::brute_force_distances(adjacency);

  std::size_t consistent = 0;
  std::size_t errata = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const int entry = testsupport::kPublishedPred[i][j];
      if (testsupport::published_entry_consistent(oracle, adjacency, i, j, entry)) {
        ++consistent;
        // Every oracle-consistent published entry is exactly what we compute.
        if (entry < 0) {
          CHECK(tables.pred(i, j) == std::nullopt);
        } else {
          CHECK(tables.pred(i, j) == static_cast<std::size_t>(entry));
        }
      } else {
        ++errata;
      }
    }
  }
  CHECK(consistent == 46);
  CHECK(errata == 18);

  // Known impossible entries: V3 is unreachable from V1 and V2 (column V3 of
  // the adjacency matrix is empty), and nothing enters V5 from V7.
  CHECK_FALSE(testsupport::published_entry_consistent(oracle, adjacency, 0, 4,
                                                      testsupport::kPublishedPred[0][4]));
  CHECK_FALSE(testsupport::published_entry_consistent(oracle, adjacency, 0, 5,
                                                      testsupport::kPublishedPred[0][5]));
  CHECK_FALSE(testsupport::published_entry_consistent(oracle, adjacency, 1, 4,
                                                      testsupport::kPublishedPred[1][4]));
  CHECK_FALSE(testsupport::published_entry_consistent(oracle, adjacency, 2, 5,
                                                      testsupport::kPublishedPred[2][5]));
}

TEST_CASE("path reconstruction walks the predecessor chain") {
  const Matrix adjacency = fixture_matrix();
  const ApspTables tables = floyd_warshall(adjacency);

  const auto long_way = get_path(tables, adjacency, 4, 3);  // V5 -> V4
  REQUIRE(long_way.has_value());
  CHECK(long_way->vertices == std::vector<std::size_t>{4, 6, 1, 3});
  CHECK(long_way->total_cost == 12.0);

  const auto self = get_path(tables, adjacency, 0, 0);
  REQUIRE(self.has_value());
  CHECK(self->vertices == std::vector<std::size_t>{0});
  CHECK(self->total_cost == 0.0);

  CHECK_FALSE(get_path(tables, adjacency, 3, 2).has_value());  // V4 -> V3
}

TEST_CASE("single vertex and empty-edge matrices") {
  Matrix one(1, kNoEdge);
  one.at(0, 0) = 0.0;
  const ApspTables tables = floyd_warshall(one);
  CHECK(tables.dist.at(0, 0) == 0.0);
  CHECK(tables.pred(0, 0) == std::nullopt);

  Matrix three(3, kNoEdge);
  for (std::size_t i = 0; i < 3; ++i) three.at(i, i) = 0.0;
  const Matrix oracle = testsupport::brute_force_distances(three);
  const ApspTables empty = floyd_warshall(three);
  CHECK(empty.dist == oracle);
}

TEST_CASE("negative cycles are rejected with the offending vertex") {
  Matrix two(2, kNoEdge);
  two.at(0, 0) = 0.0;
  two.at(1, 1) = 0.0;
  two.at(0, 1) = -1.0;
  two.at(1, 0) = -1.0;
  CHECK_THROWS_AS(floyd_warshall(two), NegativeCycleError);
  try {
    floyd_warshall(two);
  } catch (const NegativeCycleError& e) {
    CHECK(e.vertex < 2);
    CHECK(e.code() == ExitCode::NegativeCycle);
  }

  // Negative edges without a negative cycle are fine.
  Matrix ok(2, kNoEdge);
  ok.at(0, 0) = 0.0;
  ok.at(1, 1) = 0.0;
  ok.at(0, 1) = -3.0;
  const ApspTables tables = floyd_warshall(ok);
  CHECK(tables.dist.at(0, 1) == -3.0);
}

TEST_CASE("triangle property and idempotence hold on the fixture") {
  const ApspTables tables = floyd_warshall(fixture_matrix());
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      for (std::size_t k = 0; k < 8; ++k) {
        const double direct = tables.dist.at(i, j);
        const double via = tables.dist.at(i, k) + tables.dist.at(k, j);
        if (direct != kNoEdge || via != kNoEdge) {
          CHECK(direct <= via + 1e-9);
        }
      }
    }
  }
  const ApspTables again = floyd_warshall(tables.dist);
  CHECK(again.dist == tables.dist);
}

TEST_CASE("random graphs: distances and reconstructions match the oracle") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Matrix adjacency = random_adjacency(seed, 4 + seed % 5, 0.3, 10);
    const ApspTables tables = floyd_warshall(adjacency);
    const Matrix oracle = testsupport::brute_force_distances(adjacency);
    const std::size_t n = adjacency.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(tables.dist.at(i, j) == oracle.at(i, j));
        const auto path = get_path(tables, adjacency, i, j);
        if (oracle.at(i, j) == kNoEdge) {
          CHECK_FALSE(path.has_value());
          continue;
        }
        REQUIRE(path.has_value());
        double walked = 0.0;
        for (std::size_t s = 0; s + 1 < path->vertices.size(); ++s) {
          walked += adjacency.at(path->vertices[s], path->vertices[s + 1]);
        }
        CHECK(walked == oracle.at(i, j));
      }
    }
  }
}

TEST_CASE("predecessor rendering uses one-based labels and null markers") {
  Matrix two(2, kNoEdge);
  two.at(0, 0) = 0.0;
  two.at(1, 1) = 0.0;
  two.at(0, 1) = 7.0;
  const ApspTables tables = floyd_warshall(two);
  CHECK(format_pred(tables) == "null 1\nnull null\n");
}
