#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svcplan/matrix.hpp"
#include "svcplan/ontology.hpp"
#include "svcplan/registry.hpp"

namespace svcplan {

enum class AvailabilityMode { Raw, Complement };
enum class InputCoverage { All, Any };

struct WeightConfig {
  double cost_factor = 1.0;          // alpha
  double time_factor = 1.0;          // beta
  double availability_factor = 1.0;  // mu
  AvailabilityMode availability_mode = AvailabilityMode::Raw;
  SimilarityConfig similarity;
  InputCoverage input_coverage = InputCoverage::All;
  // Fixture hook: forces the weight of named edges instead of the QoS plus
  // similarity formula. Every key must name an edge that actually arises.
  std::map<std::pair<std::string, std::string>, double> edge_weight_overrides;

  void validate() const;
  bool operator==(const WeightConfig&) const = default;
};

struct ConceptMatch {
  std::string output_concept;
  std::string input_concept;
  MatchDegree degree = MatchDegree::Fail;

  bool operator==(const ConceptMatch&) const = default;
};

struct EdgeAnnotation {
  std::string source;
  std::string target;
  double weight = 0.0;
  double s_value = 0.0;  // aggregated similarity penalty
  std::vector<ConceptMatch> matches;
  bool overridden = false;  // weight forced by an override

  bool operator==(const EdgeAnnotation&) const = default;
};

// The composition graph: one vertex per published service, one directed edge
// per composable ordered pair, weighted.
class CompositionGraph {
public:
  CompositionGraph() = default;
  CompositionGraph(std::vector<std::string> vertices,
                   std::vector<EdgeAnnotation> edges, std::uint64_t built_from);

  const std::vector<std::string>& vertices() const { return vertices_; }
  // Sorted by (source index, target index).
  const std::vector<EdgeAnnotation>& edges() const { return edges_; }
  std::uint64_t built_from() const { return built_from_; }

  std::optional<std::size_t> vertex_index(const std::string& id) const;
  const EdgeAnnotation* edge(const std::string& source, const std::string& target) const;

  bool operator==(const CompositionGraph&) const = default;

private:
  std::vector<std::string> vertices_;
  std::vector<EdgeAnnotation> edges_;
  std::uint64_t built_from_ = 0;
};

// Scalar score of a service's non-functional attributes under the
// administrator weights; availability enters raw or complemented.
double qos_score(const QosAttributes& qos, const WeightConfig& cfg);

// Match list justifying an edge src -> dst, or nullopt when coverage fails.
// Under InputCoverage::All every input of dst must be matched by some output
// of src; under Any at least one. Per input the best degree wins.
std::optional<std::vector<ConceptMatch>> composable(const ConceptHierarchy& hierarchy,
                                                    const ServiceDescription& src,
                                                    const ServiceDescription& dst,
                                                    const WeightConfig& cfg);

// Returns (weight, aggregated penalty); the penalty is the arithmetic mean
// of the per-match similarity values.
std::pair<double, double> edge_weight(const ServiceDescription& src,
                                      const std::vector<ConceptMatch>& matches,
                                      const WeightConfig& cfg);

CompositionGraph build_scg(const Registry& registry, const ConceptHierarchy& hierarchy,
                           const WeightConfig& cfg);

// N x N matrix with zero diagonal, edge weights where present, kNoEdge
// elsewhere; row and column order follow the graph's vertex order.
Matrix to_adjacency(const CompositionGraph& graph);

// Deterministic DOT rendering, vertices then edges in index order.
std::string export_dot(const CompositionGraph& graph);

}  // namespace svcplan
