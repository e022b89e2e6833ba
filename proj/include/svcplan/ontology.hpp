#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace svcplan {

// Outcome of comparing an output concept against an input concept, checked
// in this order: Exact, PlugIn, Subsumes, Fail.
enum class MatchDegree { Exact, PlugIn, Subsumes, Fail };

const char* to_string(MatchDegree degree);
std::optional<MatchDegree> match_degree_from_string(const std::string& text);

// Penalty added to edge weights per match degree. A better match must never
// cost more than a worse one.
struct SimilarityConfig {
  double exact = 0.0;
  double plugin = 0.5;
  double subsumes = 1.0;

  void validate() const;
  bool operator==(const SimilarityConfig&) const = default;
};

// Penalty for a successful match; Fail carries no similarity value.
double similarity_value(MatchDegree degree, const SimilarityConfig& cfg);

struct ConceptEntry {
  std::string id;
  std::optional<std::string> parent;

  bool operator==(const ConceptEntry&) const = default;
};

// Immutable is-a forest over concept identifiers. Each concept has at most
// one parent and subsumption means strict descendant via parent links.
class ConceptHierarchy {
public:
  ConceptHierarchy() = default;

  static ConceptHierarchy from_entries(const std::vector<ConceptEntry>& entries);

  bool contains(const std::string& concept_id) const;
  std::optional<std::string> parent_of(const std::string& concept_id) const;

  // true iff `specific` is a strict descendant of `general`.
  bool subsumes(const std::string& general, const std::string& specific) const;

  MatchDegree match(const std::string& output_concept,
                    const std::string& input_concept) const;

  std::size_t size() const { return ids_.size(); }
  std::size_t link_count() const;
  const std::vector<std::string>& concepts() const { return ids_; }
  std::vector<ConceptEntry> entries() const;

private:
  std::size_t index_of(const std::string& concept_id) const;

  std::vector<std::string> ids_;      // declaration order
  std::vector<std::int64_t> parent_;  // index into ids_, -1 for roots
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace svcplan
