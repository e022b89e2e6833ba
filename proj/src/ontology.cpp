#include "svcplan/ontology.hpp"

#include "svcplan/errors.hpp"

namespace svcplan {

const char* to_string(MatchDegree degree) {
  switch (degree) {
    case MatchDegree::Exact:
      return "exact";
    case MatchDegree::PlugIn:
      return "plugin";
    case MatchDegree::Subsumes:
      return "subsumes";
    case MatchDegree::Fail:
      return "fail";
  }
  return "fail";
}

std::optional<MatchDegree> match_degree_from_string(const std::string& text) {
  if (text == "exact") return MatchDegree::Exact;
  if (text == "plugin") return MatchDegree::PlugIn;
  if (text == "subsumes") return MatchDegree::Subsumes;
  if (text == "fail") return MatchDegree::Fail;
  return std::nullopt;
}

void SimilarityConfig::validate() const {
  if (exact < 0.0 || plugin < 0.0 || subsumes < 0.0) {
    throw ValidationError("similarity penalties must be non-negative");
  }
  if (!(exact <= plugin && plugin <= subsumes)) {
    throw ValidationError(
        "similarity penalties must satisfy exact <= plugin <= subsumes");
  }
}

double similarity_value(MatchDegree degree, const SimilarityConfig& cfg) {
  switch (degree) {
    case MatchDegree::Exact:
      return cfg.exact;
    case MatchDegree::PlugIn:
      return cfg.plugin;
    case MatchDegree::Subsumes:
      return cfg.subsumes;
    case MatchDegree::Fail:
      break;
  }
  throw ValidationError("a failed match has no similarity value");
}

ConceptHierarchy ConceptHierarchy::from_entries(const std::vector<ConceptEntry>& entries) {
  ConceptHierarchy h;
  h.ids_.reserve(entries.size());
  for (const auto& entry : entries) {
    if (entry.id.empty()) {
      throw ValidationError("concept with empty id");
    }
    auto [it, inserted] = h.index_.emplace(entry.id, h.ids_.size());
    (void)it;
    if (!inserted) {
      throw ValidationError("duplicate concept id '" + entry.id + "'");
    }
    h.ids_.push_back(entry.id);
  }
  h.parent_.assign(h.ids_.size(), -1);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].parent) {
      continue;
    }
    auto it = h.index_.find(*entries[i].parent);
    if (it == h.index_.end()) {
      throw ValidationError("concept '" + entries[i].id + "': unknown parent '" +
                            *entries[i].parent + "'");
    }
    h.parent_[i] = static_cast<std::int64_t>(it->second);
  }
  // Parent links must form a forest: walk every chain, coloring nodes done
  // once their chain is known to terminate.
  std::vector<int> state(h.ids_.size(), 0);  // 0 new, 1 on current chain, 2 done
  for (std::size_t start = 0; start < h.ids_.size(); ++start) {
    std::vector<std::size_t> chain;
    std::int64_t cur = static_cast<std::int64_t>(start);
    while (cur >= 0 && state[cur] == 0) {
      state[cur] = 1;
      chain.push_back(static_cast<std::size_t>(cur));
      cur = h.parent_[cur];
    }
    if (cur >= 0 && state[cur] == 1) {
      throw ValidationError("parent cycle involving concept '" + h.ids_[cur] + "'");
    }
    for (std::size_t node : chain) {
      state[node] = 2;
    }
  }
  return h;
}

bool ConceptHierarchy::contains(const std::string& concept_id) const {
  return index_.find(concept_id) != index_.end();
}

std::size_t ConceptHierarchy::index_of(const std::string& concept_id) const {
  auto it = index_.find(concept_id);
  if (it == index_.end()) {
    throw ValidationError("undeclared concept '" + concept_id + "'");
  }
  return it->second;
}

std::optional<std::string> ConceptHierarchy::parent_of(const std::string& concept_id) const {
  const std::int64_t p = parent_[index_of(concept_id)];
  if (p < 0) {
    return std::nullopt;
  }
  return ids_[static_cast<std::size_t>(p)];
}

bool ConceptHierarchy::subsumes(const std::string& general, const std::string& specific) const {
  const std::size_t target = index_of(general);
  std::int64_t cur = parent_[index_of(specific)];
  while (cur >= 0) {
    if (static_cast<std::size_t>(cur) == target) {
      return true;
    }
    cur = parent_[cur];
  }
  return false;
}

MatchDegree ConceptHierarchy::match(const std::string& output_concept,
                                    const std::string& input_concept) const {
  const std::size_t out = index_of(output_concept);
  const std::size_t in = index_of(input_concept);
  if (out == in) {
    return MatchDegree::Exact;
  }
  if (subsumes(input_concept, output_concept)) {
    return MatchDegree::PlugIn;
  }
  if (subsumes(output_concept, input_concept)) {
    return MatchDegree::Subsumes;
  }
  return MatchDegree::Fail;
}

std::size_t ConceptHierarchy::link_count() const {
  std::size_t count = 0;
  for (std::int64_t p : parent_) {
    if (p >= 0) {
      ++count;
    }
  }
  return count;
}

std::vector<ConceptEntry> ConceptHierarchy::entries() const {
  std::vector<ConceptEntry> out;
  out.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    ConceptEntry entry;
    entry.id = ids_[i];
    if (parent_[i] >= 0) {
      entry.parent = ids_[static_cast<std::size_t>(parent_[i])];
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace svcplan
