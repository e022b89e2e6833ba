#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svcplan/planner.hpp"

namespace svcplan {

enum class OutputFormat { Plain, Structured, Dot };

std::optional<OutputFormat> output_format_from_string(const std::string& text);

// Everything the administrator tunes: weight/matching parameters for the
// graph build plus query-time planner options.
struct RunConfig {
  WeightConfig weights;
  PlannerOptions planner;

  bool operator==(const RunConfig&) const = default;
};

// Document parsing. All documents are JSON; unknown keys are rejected so a
// typo never silently falls back to a default.
std::vector<ConceptEntry> parse_hierarchy(const std::string& text);
std::string serialize_hierarchy(const ConceptHierarchy& hierarchy);

std::vector<ServiceDescription> parse_services(const std::string& text);
std::string serialize_services(const std::vector<ServiceDescription>& services);

RunConfig parse_config(const std::string& text);
std::string serialize_config(const RunConfig& config);

// FNV-1a 64-bit over the canonical config serialization, as 16 hex digits.
// Stored inside model artifacts so a stale or edited artifact is detectable.
std::string config_hash(const RunConfig& config);

ConceptHierarchy load_hierarchy(const std::string& text);
Registry load_registry(const std::string& text, const ConceptHierarchy& hierarchy);

// Non-throwing validation: every problem becomes one finding line. A null
// hierarchy limits the registry check to document structure.
std::vector<std::string> collect_hierarchy_findings(const std::string& text);
std::vector<std::string> collect_registry_findings(const std::string& text,
                                                   const ConceptHierarchy* hierarchy);

// Self-describing model artifact: hierarchy, services, graph, both tables,
// config, and the config hash, all under a format marker and version.
std::string save_model(const PlannerModel& model, const RunConfig& config);

struct LoadedModel {
  PlannerModel model;
  RunConfig config;
  std::string hash;
};

LoadedModel load_model(const std::string& text);

std::string render_plan(const CompositionPlan& plan, OutputFormat format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace svcplan
