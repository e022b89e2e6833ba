#pragma once

#include <string>

#include "svcplan/io.hpp"
#include "svcplan/planner.hpp"

namespace testsupport {

// Directory holding the checked-in fixture documents (compile definition).
std::string fixture_dir();
std::string fixture_path(const std::string& name);

// The published 8-service adjacency matrix, also available as a fixture file.
extern const char* const kMatrix3Text;

// The published predecessor matrix; -1 marks an absent entry, other values
// are 0-based vertex indices. Several entries are internally inconsistent
// with the adjacency matrix — tests validate entry-by-entry consistency
// instead of comparing wholesale.
extern const int kPublishedPred[8][8];

// The predecessor matrix this implementation computes for the same graph,
// frozen after off-line verification against the exhaustive oracle.
extern const int kExpectedPred[8][8];

// True when a published predecessor entry is consistent with the given
// distances and adjacency: an absent entry needs i == j or an unreachable
// pair; a present entry k needs a real edge k -> j lying on a least-cost
// route, i.e. dist(i,k) + w(k,j) = dist(i,j).
bool published_entry_consistent(const svcplan::Matrix& dist,
                                const svcplan::Matrix& adjacency, std::size_t i,
                                std::size_t j, int entry);

svcplan::RunConfig load_rcar_config(bool overlap = false);
svcplan::PlannerModel load_rcar_model(bool overlap = false);

}  // namespace testsupport
