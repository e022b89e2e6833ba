#include "svcplan/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "svcplan/errors.hpp"

namespace svcplan {

namespace {

using nlohmann::json;

constexpr const char* kModelFormat = "svcplan-model";
constexpr int kModelFormatVersion = 1;

json parse_json(const std::string& text, const std::string& what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw ValidationError(what + " document is not well-formed");
  }
  return doc;
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    (void)value;
    bool known = false;
    for (const char* name : allowed) {
      if (key == name) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ValidationError(where + " has unknown key '" + key + "'");
    }
  }
}

std::string require_string(const json& object, const char* key, const std::string& where) {
  if (!object.contains(key) || !object[key].is_string()) {
    throw ValidationError(where + " needs string field '" + std::string(key) + "'");
  }
  return object[key].get<std::string>();
}

double require_number(const json& object, const char* key, const std::string& where) {
  if (!object.contains(key) || !object[key].is_number()) {
    throw ValidationError(where + " needs numeric field '" + std::string(key) + "'");
  }
  return object[key].get<double>();
}

std::vector<std::string> require_string_array(const json& object, const char* key,
                                              const std::string& where) {
  if (!object.contains(key) || !object[key].is_array()) {
    throw ValidationError(where + " needs array field '" + std::string(key) + "'");
  }
  std::vector<std::string> values;
  for (const auto& item : object[key]) {
    if (!item.is_string()) {
      throw ValidationError(where + " field '" + std::string(key) +
                            "' must hold strings only");
    }
    values.push_back(item.get<std::string>());
  }
  return values;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (const unsigned char byte : data) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  }
  return hash;
}

json config_to_json(const RunConfig& config) {
  json penalties;
  penalties["exact"] = config.weights.similarity.exact;
  penalties["plugin"] = config.weights.similarity.plugin;
  penalties["subsumes"] = config.weights.similarity.subsumes;

  json doc;
  doc["alpha"] = config.weights.cost_factor;
  doc["beta"] = config.weights.time_factor;
  doc["mu"] = config.weights.availability_factor;
  doc["availability_mode"] =
      config.weights.availability_mode == AvailabilityMode::Raw ? "raw" : "complement";
  doc["penalties"] = penalties;
  doc["input_coverage"] =
      config.weights.input_coverage == InputCoverage::All ? "all" : "any";
  doc["entry_mode"] = config.planner.entry_mode == EntryMode::Any ? "any" : "all";
  doc["tie_break"] =
      config.planner.tie_break == TieBreak::FirstFound ? "first" : "overlap";
  if (!config.weights.edge_weight_overrides.empty()) {
    json overrides = json::array();
    for (const auto& [pair, weight] : config.weights.edge_weight_overrides) {
      json record;
      record["source"] = pair.first;
      record["target"] = pair.second;
      record["weight"] = weight;
      overrides.push_back(record);
    }
    doc["edge_weights"] = overrides;
  }
  return doc;
}

RunConfig config_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw ValidationError("config document must be an object");
  }
  reject_unknown_keys(doc,
                      {"alpha", "beta", "mu", "availability_mode", "penalties",
                       "input_coverage", "entry_mode", "tie_break", "edge_weights"},
                      "config");

  RunConfig config;
  if (doc.contains("alpha")) {
    config.weights.cost_factor = require_number(doc, "alpha", "config");
  }
  if (doc.contains("beta")) {
    config.weights.time_factor = require_number(doc, "beta", "config");
  }
  if (doc.contains("mu")) {
    config.weights.availability_factor = require_number(doc, "mu", "config");
  }
  if (doc.contains("availability_mode")) {
    const std::string mode = require_string(doc, "availability_mode", "config");
    if (mode == "raw") {
      config.weights.availability_mode = AvailabilityMode::Raw;
    } else if (mode == "complement") {
      config.weights.availability_mode = AvailabilityMode::Complement;
    } else {
      throw ValidationError("config availability_mode must be 'raw' or 'complement'");
    }
  }
  if (doc.contains("penalties")) {
    const json& penalties = doc["penalties"];
    if (!penalties.is_object()) {
      throw ValidationError("config penalties must be an object");
    }
    reject_unknown_keys(penalties, {"exact", "plugin", "subsumes"}, "config penalties");
    if (penalties.contains("exact")) {
      config.weights.similarity.exact = require_number(penalties, "exact", "penalties");
    }
    if (penalties.contains("plugin")) {
      config.weights.similarity.plugin =
          require_number(penalties, "plugin", "penalties");
    }
    if (penalties.contains("subsumes")) {
      config.weights.similarity.subsumes =
          require_number(penalties, "subsumes", "penalties");
    }
  }
  if (doc.contains("input_coverage")) {
    const std::string coverage = require_string(doc, "input_coverage", "config");
    if (coverage == "all") {
      config.weights.input_coverage = InputCoverage::All;
    } else if (coverage == "any") {
      config.weights.input_coverage = InputCoverage::Any;
    } else {
      throw ValidationError("config input_coverage must be 'all' or 'any'");
    }
  }
  if (doc.contains("entry_mode")) {
    const std::string mode = require_string(doc, "entry_mode", "config");
    if (mode == "any") {
      config.planner.entry_mode = EntryMode::Any;
    } else if (mode == "all") {
      config.planner.entry_mode = EntryMode::All;
    } else {
      throw ValidationError("config entry_mode must be 'any' or 'all'");
    }
  }
  if (doc.contains("tie_break")) {
    const std::string rule = require_string(doc, "tie_break", "config");
    if (rule == "first") {
      config.planner.tie_break = TieBreak::FirstFound;
    } else if (rule == "overlap") {
      config.planner.tie_break = TieBreak::PreferOverlap;
    } else {
      throw ValidationError("config tie_break must be 'first' or 'overlap'");
    }
  }
  if (doc.contains("edge_weights")) {
    const json& overrides = doc["edge_weights"];
    if (!overrides.is_array()) {
      throw ValidationError("config edge_weights must be an array");
    }
    for (const auto& record : overrides) {
      if (!record.is_object()) {
        throw ValidationError("config edge_weights entries must be objects");
      }
      reject_unknown_keys(record, {"source", "target", "weight"},
                          "config edge_weights entry");
      const std::string source = require_string(record, "source", "edge_weights entry");
      const std::string target = require_string(record, "target", "edge_weights entry");
      const double weight = require_number(record, "weight", "edge_weights entry");
      const auto key = std::make_pair(source, target);
      if (config.weights.edge_weight_overrides.count(key) != 0) {
        throw ValidationError("config edge_weights lists " + source + "->" + target +
                              " twice");
      }
      config.weights.edge_weight_overrides.emplace(key, weight);
    }
  }
  config.weights.similarity.validate();
  config.weights.validate();
  return config;
}

json service_to_json(const ServiceDescription& service) {
  json qos;
  qos["cost"] = service.qos.cost;
  qos["time"] = service.qos.execution_time;
  qos["availability"] = service.qos.availability;

  json doc;
  doc["id"] = service.id;
  doc["name"] = service.name;
  doc["inputs"] = service.inputs;
  doc["outputs"] = service.outputs;
  doc["qos"] = qos;
  return doc;
}

ServiceDescription service_from_json(const json& record, std::size_t position) {
  const std::string where = "service record " + std::to_string(position + 1);
  if (!record.is_object()) {
    throw ValidationError(where + " must be an object");
  }
  reject_unknown_keys(record, {"id", "name", "inputs", "outputs", "qos"}, where);

  ServiceDescription service;
  service.id = require_string(record, "id", where);
  service.name = require_string(record, "name", where);
  service.inputs = require_string_array(record, "inputs", where);
  service.outputs = require_string_array(record, "outputs", where);
  if (!record.contains("qos") || !record["qos"].is_object()) {
    throw ValidationError(where + " needs object field 'qos'");
  }
  const json& qos = record["qos"];
  reject_unknown_keys(qos, {"cost", "time", "availability"}, where + " qos");
  service.qos.cost = require_number(qos, "cost", where + " qos");
  service.qos.execution_time = require_number(qos, "time", where + " qos");
  service.qos.availability = require_number(qos, "availability", where + " qos");
  return service;
}

}  // namespace

std::optional<OutputFormat> output_format_from_string(const std::string& text) {
  if (text == "plain") return OutputFormat::Plain;
  if (text == "structured") return OutputFormat::Structured;
  if (text == "dot") return OutputFormat::Dot;
  return std::nullopt;
}

std::vector<ConceptEntry> parse_hierarchy(const std::string& text) {
  const json doc = parse_json(text, "hierarchy");
  if (!doc.is_array()) {
    throw ValidationError("hierarchy document must be an array of records");
  }
  std::vector<ConceptEntry> entries;
  std::size_t position = 0;
  for (const auto& record : doc) {
    const std::string where = "hierarchy record " + std::to_string(position + 1);
    if (!record.is_object()) {
      throw ValidationError(where + " must be an object");
    }
    reject_unknown_keys(record, {"id", "parent"}, where);
    ConceptEntry entry;
    entry.id = require_string(record, "id", where);
    if (record.contains("parent")) {
      if (!record["parent"].is_string()) {
        throw ValidationError(where + " field 'parent' must be a string");
      }
      entry.parent = record["parent"].get<std::string>();
    }
    entries.push_back(std::move(entry));
    ++position;
  }
  return entries;
}

std::string serialize_hierarchy(const ConceptHierarchy& hierarchy) {
  json doc = json::array();
  for (const auto& entry : hierarchy.entries()) {
    json record;
    record["id"] = entry.id;
    if (entry.parent) {
      record["parent"] = *entry.parent;
    }
    doc.push_back(record);
  }
  return doc.dump(2) + "\n";
}

std::vector<ServiceDescription> parse_services(const std::string& text) {
  const json doc = parse_json(text, "registry");
  if (!doc.is_array()) {
    throw ValidationError("registry document must be an array of records");
  }
  std::vector<ServiceDescription> services;
  std::size_t position = 0;
  for (const auto& record : doc) {
    services.push_back(service_from_json(record, position));
    ++position;
  }
  return services;
}

std::string serialize_services(const std::vector<ServiceDescription>& services) {
  json doc = json::array();
  for (const auto& service : services) {
    doc.push_back(service_to_json(service));
  }
  return doc.dump(2) + "\n";
}

RunConfig parse_config(const std::string& text) {
  return config_from_json(parse_json(text, "config"));
}

std::string serialize_config(const RunConfig& config) {
  return config_to_json(config).dump(2) + "\n";
}

std::string config_hash(const RunConfig& config) {
  // dump() on an object emits keys in sorted order, so the digest input is
  // canonical for equal configs.
  const std::uint64_t hash = fnv1a64(config_to_json(config).dump());
  std::ostringstream out;
  out << std::hex << std::nouppercase;
  out.width(16);
  out.fill('0');
  out << hash;
  return out.str();
}

ConceptHierarchy load_hierarchy(const std::string& text) {
  return ConceptHierarchy::from_entries(parse_hierarchy(text));
}

Registry load_registry(const std::string& text, const ConceptHierarchy& hierarchy) {
  return Registry::from_services(parse_services(text), hierarchy);
}

std::vector<std::string> collect_hierarchy_findings(const std::string& text) {
  std::vector<std::string> findings;
  try {
    load_hierarchy(text);
  } catch (const Error& error) {
    findings.push_back(error.what());
  }
  return findings;
}

std::vector<std::string> collect_registry_findings(const std::string& text,
                                                   const ConceptHierarchy* hierarchy) {
  std::vector<std::string> findings;
  std::vector<ServiceDescription> services;
  try {
    services = parse_services(text);
  } catch (const Error& error) {
    findings.push_back(error.what());
    return findings;
  }
  std::vector<std::string> seen;
  for (const auto& service : services) {
    if (std::find(seen.begin(), seen.end(), service.id) != seen.end()) {
      findings.push_back("duplicate service id '" + service.id + "'");
    }
    seen.push_back(service.id);
    if (hierarchy != nullptr) {
      for (const auto& finding : validate_service(service, *hierarchy)) {
        findings.push_back(finding);
      }
    }
  }
  return findings;
}

std::string save_model(const PlannerModel& model, const RunConfig& config) {
  json graph;
  graph["vertices"] = model.graph.vertices();
  json edges = json::array();
  for (const auto& edge : model.graph.edges()) {
    json matches = json::array();
    for (const auto& match : edge.matches) {
      json pair;
      pair["output"] = match.output_concept;
      pair["input"] = match.input_concept;
      pair["degree"] = to_string(match.degree);
      matches.push_back(pair);
    }
    json record;
    record["source"] = edge.source;
    record["target"] = edge.target;
    record["weight"] = edge.weight;
    record["s_value"] = edge.s_value;
    record["overridden"] = edge.overridden;
    record["matches"] = matches;
    edges.push_back(record);
  }
  graph["edges"] = edges;

  const std::size_t n = model.tables.n;
  json dist = json::array();
  json pred = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json dist_row = json::array();
    json pred_row = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      const double d = model.tables.dist.at(i, j);
      if (d == kNoEdge) {
        dist_row.push_back(nullptr);
      } else {
        dist_row.push_back(d);
      }
      const auto p = model.tables.pred(i, j);
      if (p) {
        pred_row.push_back(*p);
      } else {
        pred_row.push_back(nullptr);
      }
    }
    dist.push_back(dist_row);
    pred.push_back(pred_row);
  }

  json doc;
  doc["format"] = kModelFormat;
  doc["format_version"] = kModelFormatVersion;
  doc["revision"] = model.revision();
  doc["config_hash"] = config_hash(config);
  doc["config"] = config_to_json(config);
  doc["hierarchy"] = parse_json(serialize_hierarchy(model.hierarchy), "hierarchy");
  doc["services"] = parse_json(serialize_services(model.registry.services()), "registry");
  doc["graph"] = graph;
  doc["dist"] = dist;
  doc["pred"] = pred;
  return doc.dump(2) + "\n";
}

LoadedModel load_model(const std::string& text) {
  const json doc = parse_json(text, "model");
  if (!doc.is_object()) {
    throw ValidationError("model artifact must be an object");
  }
  reject_unknown_keys(doc,
                      {"format", "format_version", "revision", "config_hash", "config",
                       "hierarchy", "services", "graph", "dist", "pred"},
                      "model artifact");
  if (require_string(doc, "format", "model artifact") != kModelFormat) {
    throw ValidationError("model artifact has the wrong format marker");
  }
  if (!doc.contains("format_version") || !doc["format_version"].is_number_integer() ||
      doc["format_version"].get<int>() != kModelFormatVersion) {
    throw ValidationError("model artifact has an unsupported format version");
  }
  if (!doc.contains("revision") || !doc["revision"].is_number_unsigned()) {
    throw ValidationError("model artifact needs unsigned field 'revision'");
  }
  const auto revision = doc["revision"].get<std::uint64_t>();

  if (!doc.contains("config") || !doc["config"].is_object()) {
    throw ValidationError("model artifact needs object field 'config'");
  }
  RunConfig config = config_from_json(doc["config"]);
  const std::string stored_hash = require_string(doc, "config_hash", "model artifact");
  if (config_hash(config) != stored_hash) {
    throw ValidationError("model artifact config hash does not match its config");
  }

  if (!doc.contains("hierarchy")) {
    throw ValidationError("model artifact needs field 'hierarchy'");
  }
  ConceptHierarchy hierarchy =
      ConceptHierarchy::from_entries(parse_hierarchy(doc["hierarchy"].dump()));
  if (!doc.contains("services")) {
    throw ValidationError("model artifact needs field 'services'");
  }
  Registry registry =
      Registry::restore(parse_services(doc["services"].dump()), hierarchy, revision);

  if (!doc.contains("graph") || !doc["graph"].is_object()) {
    throw ValidationError("model artifact needs object field 'graph'");
  }
  const json& graph_doc = doc["graph"];
  reject_unknown_keys(graph_doc, {"vertices", "edges"}, "model graph");
  std::vector<std::string> vertices =
      require_string_array(graph_doc, "vertices", "model graph");
  if (!graph_doc.contains("edges") || !graph_doc["edges"].is_array()) {
    throw ValidationError("model graph needs array field 'edges'");
  }
  std::vector<EdgeAnnotation> edges;
  for (const auto& record : graph_doc["edges"]) {
    const std::string where = "model graph edge";
    if (!record.is_object()) {
      throw ValidationError(where + " must be an object");
    }
    reject_unknown_keys(record,
                        {"source", "target", "weight", "s_value", "overridden",
                         "matches"},
                        where);
    EdgeAnnotation edge;
    edge.source = require_string(record, "source", where);
    edge.target = require_string(record, "target", where);
    edge.weight = require_number(record, "weight", where);
    edge.s_value = require_number(record, "s_value", where);
    if (!record.contains("overridden") || !record["overridden"].is_boolean()) {
      throw ValidationError(where + " needs boolean field 'overridden'");
    }
    edge.overridden = record["overridden"].get<bool>();
    if (!record.contains("matches") || !record["matches"].is_array()) {
      throw ValidationError(where + " needs array field 'matches'");
    }
    for (const auto& pair : record["matches"]) {
      if (!pair.is_object()) {
        throw ValidationError(where + " match entries must be objects");
      }
      reject_unknown_keys(pair, {"output", "input", "degree"}, where + " match");
      ConceptMatch match;
      match.output_concept = require_string(pair, "output", where + " match");
      match.input_concept = require_string(pair, "input", where + " match");
      const auto degree =
          match_degree_from_string(require_string(pair, "degree", where + " match"));
      if (!degree || *degree == MatchDegree::Fail) {
        throw ValidationError(where + " match has an invalid degree");
      }
      match.degree = *degree;
      edge.matches.push_back(std::move(match));
    }
    edges.push_back(std::move(edge));
  }
  CompositionGraph graph(std::move(vertices), std::move(edges), revision);

  const std::size_t n = graph.vertices().size();
  auto load_table = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_array() || doc[key].size() != n) {
      throw ValidationError("model artifact table '" + std::string(key) +
                            "' must be a " + std::to_string(n) + "-row array");
    }
    return doc[key];
  };
  const json dist_doc = load_table("dist");
  const json pred_doc = load_table("pred");

  ApspTables tables;
  tables.n = n;
  tables.dist = Matrix(n, kNoEdge);
  tables.pred_cells.assign(n * n, -1);
  tables.built_from = revision;
  for (std::size_t i = 0; i < n; ++i) {
    const json& dist_row = dist_doc[i];
    const json& pred_row = pred_doc[i];
    if (!dist_row.is_array() || dist_row.size() != n || !pred_row.is_array() ||
        pred_row.size() != n) {
      throw ValidationError("model artifact tables must be square");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const json& d = dist_row[j];
      if (d.is_null()) {
        tables.dist.at(i, j) = kNoEdge;
      } else if (d.is_number()) {
        tables.dist.at(i, j) = d.get<double>();
      } else {
        throw ValidationError("model artifact dist entries must be numbers or null");
      }
      const json& p = pred_row[j];
      if (p.is_null()) {
        tables.pred_cells[i * n + j] = -1;
      } else if (p.is_number_unsigned() && p.get<std::uint64_t>() < n) {
        tables.pred_cells[i * n + j] = static_cast<std::int64_t>(p.get<std::uint64_t>());
      } else {
        throw ValidationError("model artifact pred entries must be vertex indices or null");
      }
    }
  }

  LoadedModel loaded{PlannerModel::assemble(std::move(hierarchy), std::move(registry),
                                            config.weights, std::move(graph),
                                            std::move(tables)),
                     config, stored_hash};
  return loaded;
}

std::string render_plan(const CompositionPlan& plan, OutputFormat format) {
  if (format == OutputFormat::Structured) {
    json goals = json::array();
    for (const auto& goal : plan.goals) {
      json record;
      record["output"] = goal.requested_output;
      record["entry"] = goal.entry_service;
      record["provider"] = goal.provider_service;
      record["path"] = goal.path;
      record["cost"] = goal.cost;
      goals.push_back(record);
    }
    json edges = json::array();
    for (const auto& edge : plan.merged_edges) {
      json record;
      record["source"] = edge.source;
      record["target"] = edge.target;
      record["weight"] = edge.weight;
      edges.push_back(record);
    }
    json merged;
    merged["vertices"] = plan.merged_vertices;
    merged["edges"] = edges;
    json doc;
    doc["goals"] = goals;
    doc["entry_services"] = plan.entry_services;
    doc["merged"] = merged;
    return doc.dump(2) + "\n";
  }

  if (format == OutputFormat::Dot) {
    auto quote = [](const std::string& text) {
      std::string quoted;
      quoted.reserve(text.size() + 2);
      quoted.push_back('"');
      for (const char c : text) {
        if (c == '"' || c == '\\') {
          quoted.push_back('\\');
        }
        quoted.push_back(c);
      }
      quoted.push_back('"');
      return quoted;
    };
    std::ostringstream out;
    out << "digraph plan {\n  rankdir=LR;\n";
    out << "  " << quote("START") << " [shape=diamond];\n";
    for (const auto& id : plan.merged_vertices) {
      out << "  " << quote(id) << ";\n";
    }
    for (const auto& goal : plan.goals) {
      out << "  " << quote("GOAL:" + goal.requested_output) << " [shape=diamond];\n";
    }
    for (const auto& id : plan.entry_services) {
      out << "  " << quote("START") << " -> " << quote(id) << " [label=\"0\"];\n";
    }
    for (const auto& edge : plan.merged_edges) {
      out << "  " << quote(edge.source) << " -> " << quote(edge.target) << " [label=\""
          << format_weight(edge.weight) << "\"];\n";
    }
    for (const auto& goal : plan.goals) {
      out << "  " << quote(goal.provider_service) << " -> "
          << quote("GOAL:" + goal.requested_output) << " [label=\"0\"];\n";
    }
    out << "}\n";
    return out.str();
  }

  std::ostringstream out;
  out << "entry services:";
  for (const auto& id : plan.entry_services) {
    out << " " << id;
  }
  out << "\n";
  for (const auto& goal : plan.goals) {
    out << "goal " << goal.requested_output << ": path";
    for (std::size_t i = 0; i < goal.path.size(); ++i) {
      out << (i == 0 ? " " : " -> ") << goal.path[i];
    }
    out << ", cost " << format_weight(goal.cost) << "\n";
  }
  out << "merged vertices:";
  for (const auto& id : plan.merged_vertices) {
    out << " " << id;
  }
  out << "\n";
  out << "merged edges:";
  for (const auto& edge : plan.merged_edges) {
    out << " " << edge.source << "->" << edge.target << "(" << format_weight(edge.weight)
        << ")";
  }
  out << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot read file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("cannot write file '" + path + "'");
  }
  out << content;
  if (!out) {
    throw ValidationError("failed while writing file '" + path + "'");
  }
}

}  // namespace svcplan
