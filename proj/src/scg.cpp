#include "svcplan/scg.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "svcplan/errors.hpp"

namespace svcplan {

void WeightConfig::validate() const {
  if (cost_factor == 0.0 && time_factor == 0.0 && availability_factor == 0.0) {
    throw ValidationError("at least one of the weight factors must be nonzero");
  }
  similarity.validate();
}

CompositionGraph::CompositionGraph(std::vector<std::string> vertices,
                                   std::vector<EdgeAnnotation> edges,
                                   std::uint64_t built_from)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), built_from_(built_from) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index.emplace(vertices_[i], i).second) {
      throw ValidationError("duplicate graph vertex '" + vertices_[i] + "'");
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& edge : edges_) {
    auto src = index.find(edge.source);
    auto dst = index.find(edge.target);
    if (src == index.end() || dst == index.end()) {
      throw ValidationError("edge " + edge.source + "->" + edge.target +
                            " references a missing vertex");
    }
    if (src->second == dst->second) {
      throw ValidationError("self edge on vertex '" + edge.source + "'");
    }
    if (!seen.emplace(src->second, dst->second).second) {
      throw ValidationError("duplicate edge " + edge.source + "->" + edge.target);
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [&](const EdgeAnnotation& a, const EdgeAnnotation& b) {
              return std::pair(index.at(a.source), index.at(a.target)) <
                     std::pair(index.at(b.source), index.at(b.target));
            });
}

std::optional<std::size_t> CompositionGraph::vertex_index(const std::string& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

const EdgeAnnotation* CompositionGraph::edge(const std::string& source,
                                             const std::string& target) const {
  auto it = std::find_if(edges_.begin(), edges_.end(), [&](const EdgeAnnotation& e) {
    return e.source == source && e.target == target;
  });
  return it == edges_.end() ? nullptr : &*it;
}

double qos_score(const QosAttributes& qos, const WeightConfig& cfg) {
  const double availability = cfg.availability_mode == AvailabilityMode::Raw
                                  ? qos.availability
                                  : 1.0 - qos.availability;
  return cfg.cost_factor * qos.cost + cfg.time_factor * qos.execution_time +
         cfg.availability_factor * availability;
}

namespace {

int degree_rank(MatchDegree degree) {
  switch (degree) {
    case MatchDegree::Exact:
      return 0;
    case MatchDegree::PlugIn:
      return 1;
    case MatchDegree::Subsumes:
      return 2;
    case MatchDegree::Fail:
      return 3;
  }
  return 3;
}

}  // namespace

std::optional<std::vector<ConceptMatch>> composable(const ConceptHierarchy& hierarchy,
                                                    const ServiceDescription& src,
                                                    const ServiceDescription& dst,
                                                    const WeightConfig& cfg) {
  std::vector<ConceptMatch> matches;
  for (const auto& input : dst.inputs) {
    const std::string* best_output = nullptr;
    MatchDegree best = MatchDegree::Fail;
    for (const auto& output : src.outputs) {
      const MatchDegree degree = hierarchy.match(output, input);
      if (degree_rank(degree) < degree_rank(best)) {
        best = degree;
        best_output = &output;
      }
    }
    if (best_output != nullptr) {
      matches.push_back({*best_output, input, best});
    } else if (cfg.input_coverage == InputCoverage::All) {
      return std::nullopt;
    }
  }
  if (matches.empty()) {
    return std::nullopt;
  }
  return matches;
}

std::pair<double, double> edge_weight(const ServiceDescription& src,
                                      const std::vector<ConceptMatch>& matches,
                                      const WeightConfig& cfg) {
  double penalty_sum = 0.0;
  for (const auto& match : matches) {
    penalty_sum += similarity_value(match.degree, cfg.similarity);
  }
  const double s_value = penalty_sum / static_cast<double>(matches.size());
  return {qos_score(src.qos, cfg) + s_value, s_value};
}

CompositionGraph build_scg(const Registry& registry, const ConceptHierarchy& hierarchy,
                           const WeightConfig& cfg) {
  cfg.validate();
  std::vector<std::string> vertices;
  vertices.reserve(registry.size());
  for (const auto& service : registry.services()) {
    vertices.push_back(service.id);
  }

  std::vector<EdgeAnnotation> edges;
  std::set<std::pair<std::string, std::string>> used_overrides;
  for (const auto& src : registry.services()) {
    for (const auto& dst : registry.services()) {
      if (src.id == dst.id) {
        continue;
      }
      auto matches = composable(hierarchy, src, dst, cfg);
      if (!matches) {
        continue;
      }
      auto [weight, s_value] = edge_weight(src, *matches, cfg);
      EdgeAnnotation edge{src.id, dst.id, weight, s_value, std::move(*matches), false};
      auto override_it = cfg.edge_weight_overrides.find({src.id, dst.id});
      if (override_it != cfg.edge_weight_overrides.end()) {
        edge.weight = override_it->second;
        edge.overridden = true;
        used_overrides.insert(override_it->first);
      }
      edges.push_back(std::move(edge));
    }
  }
  for (const auto& [key, weight] : cfg.edge_weight_overrides) {
    (void)weight;
    if (!used_overrides.count(key)) {
      throw ValidationError("edge weight override " + key.first + "->" + key.second +
                            " does not correspond to a composable edge");
    }
  }
  return CompositionGraph(std::move(vertices), std::move(edges), registry.revision());
}

Matrix to_adjacency(const CompositionGraph& graph) {
  const std::size_t n = graph.vertices().size();
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 0.0;
  }
  for (const auto& edge : graph.edges()) {
    const std::size_t i = *graph.vertex_index(edge.source);
    const std::size_t j = *graph.vertex_index(edge.target);
    m.at(i, j) = edge.weight;
  }
  return m;
}

namespace {

std::string dot_quote(const std::string& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const CompositionGraph& graph) {
  std::string out = "digraph scg {\n  rankdir=LR;\n";
  for (const auto& vertex : graph.vertices()) {
    out += "  " + dot_quote(vertex) + ";\n";
  }
  for (const auto& edge : graph.edges()) {
    out += "  " + dot_quote(edge.source) + " -> " + dot_quote(edge.target) +
           " [label=\"" + format_weight(edge.weight) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace svcplan
