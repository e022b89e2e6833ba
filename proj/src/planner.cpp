#include "svcplan/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "svcplan/errors.hpp"

namespace svcplan {

namespace {

constexpr double kCostEps = 1e-9;

// An output concept feeds an input concept when their match succeeds at any
// degree; the degree itself only matters for edge weights.
bool feeds(const ConceptHierarchy& hierarchy, const std::string& output_concept,
           const std::string& input_concept) {
  return hierarchy.match(output_concept, input_concept) != MatchDegree::Fail;
}

void validate_query(const CompositionQuery& query) {
  if (query.provided_inputs.empty()) {
    throw ValidationError("query provides no input concepts");
  }
  if (query.requested_outputs.empty()) {
    throw ValidationError("query requests no output concepts");
  }
  for (const auto& concept_id : query.provided_inputs) {
    if (concept_id.empty()) {
      throw ValidationError("query contains an empty provided input concept");
    }
  }
  for (const auto& concept_id : query.requested_outputs) {
    if (concept_id.empty()) {
      throw ValidationError("query contains an empty requested output concept");
    }
  }
}

std::vector<std::string> path_ids(const CompositionGraph& graph, const Path& path) {
  std::vector<std::string> ids;
  ids.reserve(path.vertices.size());
  for (const std::size_t v : path.vertices) {
    ids.push_back(graph.vertices()[v]);
  }
  return ids;
}

}  // namespace

PlannerModel PlannerModel::build(Registry registry, ConceptHierarchy hierarchy,
                                 WeightConfig weights) {
  weights.validate();
  CompositionGraph graph = build_scg(registry, hierarchy, weights);
  Matrix adjacency = to_adjacency(graph);
  ApspTables tables = floyd_warshall(adjacency, graph.built_from());
  return PlannerModel{std::move(hierarchy), std::move(registry), std::move(weights),
                      std::move(graph),     std::move(adjacency), std::move(tables)};
}

PlannerModel PlannerModel::assemble(ConceptHierarchy hierarchy, Registry registry,
                                    WeightConfig weights, CompositionGraph graph,
                                    ApspTables tables) {
  weights.validate();
  if (graph.built_from() != registry.revision()) {
    throw ValidationError("stored graph was built from revision " +
                          std::to_string(graph.built_from()) +
                          " but the registry is at revision " +
                          std::to_string(registry.revision()));
  }
  if (tables.built_from != graph.built_from()) {
    throw ValidationError("stored tables were built from revision " +
                          std::to_string(tables.built_from) +
                          " but the graph is from revision " +
                          std::to_string(graph.built_from()));
  }
  if (tables.n != graph.vertices().size()) {
    throw ValidationError("stored tables cover " + std::to_string(tables.n) +
                          " vertices but the graph has " +
                          std::to_string(graph.vertices().size()));
  }
  for (const auto& id : graph.vertices()) {
    if (registry.find(id) == nullptr) {
      throw ValidationError("stored graph names service '" + id +
                            "' which the registry does not hold");
    }
  }
  if (graph.vertices().size() != registry.size()) {
    throw ValidationError("stored graph and registry disagree on the service count");
  }
  Matrix adjacency = to_adjacency(graph);
  return PlannerModel{std::move(hierarchy), std::move(registry), std::move(weights),
                      std::move(graph),     std::move(adjacency), std::move(tables)};
}

std::vector<std::string> find_entry_services(const PlannerModel& model,
                                             const CompositionQuery& query,
                                             EntryMode mode) {
  validate_query(query);

  // Provided concepts the hierarchy does not know cannot feed anything, so
  // they are simply ignored rather than rejected.
  std::vector<std::string> known;
  for (const auto& concept_id : query.provided_inputs) {
    if (model.hierarchy.contains(concept_id)) {
      known.push_back(concept_id);
    }
  }

  std::vector<std::string> entries;
  for (const auto& id : model.graph.vertices()) {
    const ServiceDescription* service = model.registry.find(id);
    if (service == nullptr) {
      continue;
    }
    std::size_t matched = 0;
    for (const auto& input : service->inputs) {
      const bool hit = std::any_of(known.begin(), known.end(),
                                   [&](const std::string& provided) {
                                     return feeds(model.hierarchy, provided, input);
                                   });
      if (hit) {
        ++matched;
      }
    }
    const bool qualifies = mode == EntryMode::All
                               ? matched == service->inputs.size()
                               : matched > 0;
    if (qualifies) {
      entries.push_back(id);
    }
  }
  if (entries.empty()) {
    throw NoEntryError("no published service accepts any of the provided inputs");
  }
  return entries;
}

std::map<std::string, std::vector<std::string>> find_goal_providers(
    const PlannerModel& model, const CompositionQuery& query) {
  validate_query(query);

  std::map<std::string, std::vector<std::string>> providers;
  for (const auto& requested : query.requested_outputs) {
    if (providers.count(requested) != 0) {
      continue;
    }
    std::vector<std::string> found;
    if (model.hierarchy.contains(requested)) {
      for (const auto& id : model.graph.vertices()) {
        const ServiceDescription* service = model.registry.find(id);
        if (service == nullptr) {
          continue;
        }
        const bool hit = std::any_of(service->outputs.begin(), service->outputs.end(),
                                     [&](const std::string& output) {
                                       return feeds(model.hierarchy, output, requested);
                                     });
        if (hit) {
          found.push_back(id);
        }
      }
    }
    if (found.empty()) {
      throw UnsatisfiableGoalError("no published service provides output concept '" +
                                   requested + "'");
    }
    providers.emplace(requested, std::move(found));
  }
  return providers;
}

std::vector<Path> equal_cost_paths(const ApspTables& tables, const Matrix& adjacency,
                                   std::size_t from, std::size_t to, std::size_t cap) {
  std::vector<Path> result;
  const double total = tables.dist.at(from, to);
  if (total == kNoEdge) {
    return result;
  }
  if (from == to) {
    result.push_back(Path{{from}, 0.0});
    return result;
  }

  const std::size_t n = tables.n;
  std::vector<std::size_t> current{from};
  std::vector<char> on_path(n, 0);
  on_path[from] = 1;

  // Forward DFS keeping only optimal prefixes: an edge (v, u) stays on a
  // least-cost route exactly when acc + w(v, u) + dist(u, to) hits the total.
  auto walk = [&](auto&& self, std::size_t v, double acc) -> void {
    if (result.size() >= cap) {
      return;
    }
    if (v == to) {
      result.push_back(Path{current, acc});
      return;
    }
    for (std::size_t u = 0; u < n; ++u) {
      if (on_path[u]) {
        continue;
      }
      const double w = adjacency.at(v, u);
      if (w == kNoEdge || v == u) {
        continue;
      }
      const double rest = tables.dist.at(u, to);
      if (rest == kNoEdge) {
        continue;
      }
      if (std::abs(acc + w + rest - total) > kCostEps) {
        continue;
      }
      current.push_back(u);
      on_path[u] = 1;
      self(self, u, acc + w);
      on_path[u] = 0;
      current.pop_back();
    }
  };
  walk(walk, from, 0.0);
  return result;
}

namespace {

struct GoalCandidates {
  std::string requested;        // concept this goal asks for
  double cost = 0.0;            // least cost over all entry/provider pairs
  std::vector<Path> routes;     // tie set, lexicographic order
};

// Least-cost routes for one goal: every (entry, provider) pair achieving the
// minimal distance contributes its equal-cost paths. When enumeration would
// overflow the cap, the predecessor walk for the first minimal pair stands in
// as the single deterministic route.
GoalCandidates collect_candidates(const PlannerModel& model,
                                  const std::string& requested,
                                  const std::vector<std::size_t>& entry_idx,
                                  const std::vector<std::size_t>& provider_idx) {
  constexpr std::size_t kRouteCap = 128;

  double best = std::numeric_limits<double>::infinity();
  for (const std::size_t e : entry_idx) {
    for (const std::size_t p : provider_idx) {
      const double d = model.tables.dist.at(e, p);
      if (d < best) {
        best = d;
      }
    }
  }
  if (best == std::numeric_limits<double>::infinity()) {
    throw UnreachableGoalError("goal '" + requested +
                               "' is unreachable from every entry service");
  }

  GoalCandidates out;
  out.requested = requested;
  out.cost = best;

  bool capped = false;
  std::size_t first_e = 0;
  std::size_t first_p = 0;
  bool first_set = false;
  for (const std::size_t e : entry_idx) {
    for (const std::size_t p : provider_idx) {
      if (std::abs(model.tables.dist.at(e, p) - best) > kCostEps) {
        continue;
      }
      if (!first_set) {
        first_e = e;
        first_p = p;
        first_set = true;
      }
      auto routes = equal_cost_paths(model.tables, model.adjacency, e, p,
                                     kRouteCap + 1);
      if (routes.size() > kRouteCap) {
        capped = true;
      }
      for (auto& route : routes) {
        out.routes.push_back(std::move(route));
      }
      if (out.routes.size() > kRouteCap) {
        capped = true;
      }
      if (capped) {
        break;
      }
    }
    if (capped) {
      break;
    }
  }

  if (capped) {
    auto fallback = get_path(model.tables, model.adjacency, first_e, first_p);
    if (!fallback) {
      throw std::logic_error("reachable goal lost its path during reconstruction");
    }
    out.routes.clear();
    out.routes.push_back(std::move(*fallback));
    return out;
  }

  std::sort(out.routes.begin(), out.routes.end(),
            [](const Path& a, const Path& b) { return a.vertices < b.vertices; });
  out.routes.erase(std::unique(out.routes.begin(), out.routes.end()),
                   out.routes.end());
  return out;
}

// The predecessor-walk route for the first minimal (entry, provider) pair;
// pairs are scanned in vertex order on both sides.
Path first_found_route(const PlannerModel& model, const GoalCandidates& goal,
                       const std::vector<std::size_t>& entry_idx,
                       const std::vector<std::size_t>& provider_idx) {
  for (const std::size_t e : entry_idx) {
    for (const std::size_t p : provider_idx) {
      if (std::abs(model.tables.dist.at(e, p) - goal.cost) > kCostEps) {
        continue;
      }
      auto route = get_path(model.tables, model.adjacency, e, p);
      if (!route) {
        throw std::logic_error("reachable goal lost its path during reconstruction");
      }
      return *route;
    }
  }
  throw std::logic_error("no entry/provider pair matches the recorded goal cost");
}

}  // namespace

CompositionPlan resolve(const PlannerModel& model, const CompositionQuery& query,
                        const PlannerOptions& options) {
  const std::vector<std::string> entries =
      find_entry_services(model, query, options.entry_mode);
  const auto providers = find_goal_providers(model, query);

  auto index_of = [&](const std::string& id) {
    const auto idx = model.graph.vertex_index(id);
    if (!idx) {
      throw std::logic_error("registry service missing from the graph: " + id);
    }
    return *idx;
  };

  std::vector<std::size_t> entry_idx;
  entry_idx.reserve(entries.size());
  for (const auto& id : entries) {
    entry_idx.push_back(index_of(id));
  }

  // Goals keep query order, duplicates collapse onto the first occurrence.
  std::vector<std::string> goal_order;
  for (const auto& requested : query.requested_outputs) {
    if (std::find(goal_order.begin(), goal_order.end(), requested) ==
        goal_order.end()) {
      goal_order.push_back(requested);
    }
  }

  std::vector<GoalCandidates> goals;
  goals.reserve(goal_order.size());
  for (const auto& requested : goal_order) {
    std::vector<std::size_t> provider_idx;
    for (const auto& id : providers.at(requested)) {
      provider_idx.push_back(index_of(id));
    }
    goals.push_back(collect_candidates(model, requested, entry_idx, provider_idx));
  }

  std::vector<Path> chosen(goals.size());
  if (options.tie_break == TieBreak::FirstFound) {
    for (std::size_t g = 0; g < goals.size(); ++g) {
      std::vector<std::size_t> provider_idx;
      for (const auto& id : providers.at(goals[g].requested)) {
        provider_idx.push_back(index_of(id));
      }
      chosen[g] = first_found_route(model, goals[g], entry_idx, provider_idx);
    }
  } else {
    // Overlap tie-break: goals with a single route anchor the plan, then the
    // tied goals each take the route adding the fewest new vertices, in query
    // order, lexicographic route order deciding remaining ties.
    std::set<std::size_t> committed;
    for (std::size_t g = 0; g < goals.size(); ++g) {
      if (goals[g].routes.size() == 1) {
        chosen[g] = goals[g].routes.front();
        committed.insert(chosen[g].vertices.begin(), chosen[g].vertices.end());
      }
    }
    for (std::size_t g = 0; g < goals.size(); ++g) {
      if (goals[g].routes.size() == 1) {
        continue;
      }
      const Path* pick = nullptr;
      std::size_t pick_new = std::numeric_limits<std::size_t>::max();
      for (const Path& route : goals[g].routes) {
        std::size_t fresh = 0;
        for (const std::size_t v : route.vertices) {
          if (committed.count(v) == 0) {
            ++fresh;
          }
        }
        if (fresh < pick_new) {
          pick_new = fresh;
          pick = &route;
        }
      }
      chosen[g] = *pick;
      committed.insert(pick->vertices.begin(), pick->vertices.end());
    }
  }

  CompositionPlan plan;
  std::set<std::size_t> used_vertices;
  std::set<std::pair<std::size_t, std::size_t>> used_edges;
  std::set<std::size_t> used_entries;
  for (std::size_t g = 0; g < goals.size(); ++g) {
    const Path& route = chosen[g];
    GoalResolution resolution;
    resolution.requested_output = goals[g].requested;
    resolution.entry_service = model.graph.vertices()[route.vertices.front()];
    resolution.provider_service = model.graph.vertices()[route.vertices.back()];
    resolution.path = path_ids(model.graph, route);
    resolution.cost = route.total_cost;
    plan.goals.push_back(std::move(resolution));

    used_entries.insert(route.vertices.front());
    used_vertices.insert(route.vertices.begin(), route.vertices.end());
    for (std::size_t step = 0; step + 1 < route.vertices.size(); ++step) {
      used_edges.emplace(route.vertices[step], route.vertices[step + 1]);
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> edge_list(used_edges.begin(),
                                                             used_edges.end());
  if (!is_acyclic(model.graph.vertices().size(), edge_list)) {
    throw PlanIntegrityError("merged plan contains a cycle");
  }

  for (const std::size_t v : used_entries) {
    plan.entry_services.push_back(model.graph.vertices()[v]);
  }
  for (const std::size_t v : used_vertices) {
    plan.merged_vertices.push_back(model.graph.vertices()[v]);
  }
  for (const auto& [s, t] : edge_list) {
    plan.merged_edges.push_back(PlanEdge{model.graph.vertices()[s],
                                         model.graph.vertices()[t],
                                         model.adjacency.at(s, t)});
  }
  return plan;
}

PlannerModel refresh(const PlannerModel& model, Registry registry,
                     ConceptHierarchy hierarchy, WeightConfig weights) {
  if (registry.revision() == model.revision()) {
    throw ValidationError("refresh with unchanged registry revision " +
                          std::to_string(model.revision()));
  }
  return PlannerModel::build(std::move(registry), std::move(hierarchy),
                             std::move(weights));
}

std::map<std::string, double> plan_cost(const CompositionPlan& plan) {
  std::map<std::string, double> costs;
  for (const auto& goal : plan.goals) {
    costs[goal.requested_output] = goal.cost;
  }
  return costs;
}

bool is_acyclic(std::size_t n,
                const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& [s, t] : edges) {
    out[s].push_back(t);
    ++indegree[t];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) {
      ready.push_back(v);
    }
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (const std::size_t u : out[v]) {
      if (--indegree[u] == 0) {
        ready.push_back(u);
      }
    }
  }
  return seen == n;
}

}  // namespace svcplan
