#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "svcplan/apsp.hpp"
#include "svcplan/scg.hpp"

namespace svcplan {

// How provided query inputs qualify a service as an entry point: Any needs
// one matched input, All needs every input of the service matched.
enum class EntryMode { Any, All };

// How equal-cost routes are broken: FirstFound keeps the predecessor-matrix
// route; PreferOverlap picks, among all equal-cost routes, the one sharing
// the most vertices with the rest of the plan.
enum class TieBreak { FirstFound, PreferOverlap };

struct PlannerOptions {
  EntryMode entry_mode = EntryMode::Any;
  TieBreak tie_break = TieBreak::FirstFound;

  bool operator==(const PlannerOptions&) const = default;
};

struct CompositionQuery {
  std::vector<std::string> provided_inputs;
  std::vector<std::string> requested_outputs;

  bool operator==(const CompositionQuery&) const = default;
};

// One immutable publish-time snapshot. Graph and tables always derive from
// the same registry revision; queries only ever read a complete snapshot.
struct PlannerModel {
  ConceptHierarchy hierarchy;
  Registry registry;
  WeightConfig weights;
  CompositionGraph graph;
  Matrix adjacency;
  ApspTables tables;

  static PlannerModel build(Registry registry, ConceptHierarchy hierarchy,
                            WeightConfig weights);
  // Reassembles a snapshot from stored parts without re-running the
  // all-pairs computation; checks that the parts belong together.
  static PlannerModel assemble(ConceptHierarchy hierarchy, Registry registry,
                               WeightConfig weights, CompositionGraph graph,
                               ApspTables tables);

  std::uint64_t revision() const { return graph.built_from(); }
};

struct GoalResolution {
  std::string requested_output;
  std::string entry_service;
  std::string provider_service;
  std::vector<std::string> path;  // service ids, entry..provider
  double cost = 0.0;

  bool operator==(const GoalResolution&) const = default;
};

struct PlanEdge {
  std::string source;
  std::string target;
  double weight = 0.0;

  bool operator==(const PlanEdge&) const = default;
};

struct CompositionPlan {
  std::vector<GoalResolution> goals;          // query order
  std::vector<std::string> entry_services;    // entries in use, vertex order
  std::vector<std::string> merged_vertices;   // vertex order
  std::vector<PlanEdge> merged_edges;         // (source, target) vertex order

  bool operator==(const CompositionPlan&) const = default;
};

// Services with inputs matched by the provided concepts; NoEntryError when
// none qualifies. Results follow vertex order.
std::vector<std::string> find_entry_services(const PlannerModel& model,
                                             const CompositionQuery& query,
                                             EntryMode mode = EntryMode::Any);

// Per requested output, the services publishing a matching output concept;
// UnsatisfiableGoalError names the first concept nobody provides.
std::map<std::string, std::vector<std::string>> find_goal_providers(
    const PlannerModel& model, const CompositionQuery& query);

// Answers a query from the precomputed tables alone. Virtual start/goal
// vertices are zero-weight, so the best route per goal is the argmin of
// dist(entry, provider) over the candidate pairs; no graph search runs at
// query time. Per-goal paths are merged into one acyclic subgraph.
CompositionPlan resolve(const PlannerModel& model, const CompositionQuery& query,
                        const PlannerOptions& options = {});

// Full rebuild for a changed registry; rejects a no-op revision.
PlannerModel refresh(const PlannerModel& model, Registry registry,
                     ConceptHierarchy hierarchy, WeightConfig weights);

std::map<std::string, double> plan_cost(const CompositionPlan& plan);

// All least-cost paths from `from` to `to`, in lexicographic vertex-index
// order, at most `cap` of them. Feeds the overlap tie-break and lets tests
// assert that a reported route belongs to the tie set.
std::vector<Path> equal_cost_paths(const ApspTables& tables, const Matrix& adjacency,
                                   std::size_t from, std::size_t to,
                                   std::size_t cap = 128);

// True when the directed edges over n vertices contain no cycle.
bool is_acyclic(std::size_t n,
                const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace svcplan
