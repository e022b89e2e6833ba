#include "svcplan/cli.hpp"

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "svcplan/apsp.hpp"
#include "svcplan/bench.hpp"
#include "svcplan/errors.hpp"
#include "svcplan/io.hpp"
#include "svcplan/planner.hpp"

namespace svcplan {

namespace {

int cmd_build(const std::string& registry_path, const std::string& hierarchy_path,
              const std::string& config_path, const std::string& output_path,
              std::ostream& out) {
  const ConceptHierarchy hierarchy = load_hierarchy(read_file(hierarchy_path));
  const Registry registry = load_registry(read_file(registry_path), hierarchy);
  const RunConfig config = parse_config(read_file(config_path));
  const PlannerModel model = PlannerModel::build(registry, hierarchy, config.weights);
  write_file(output_path, save_model(model, config));
  out << "wrote " << output_path << ": " << model.graph.vertices().size()
      << " services, " << model.graph.edges().size() << " edges, revision "
      << model.revision() << "\n";
  return 0;
}

int cmd_query(const std::string& model_path, const std::vector<std::string>& inputs,
              const std::vector<std::string>& outputs, const std::string& format_name,
              std::ostream& out) {
  const LoadedModel loaded = load_model(read_file(model_path));
  CompositionQuery query;
  query.provided_inputs = inputs;
  query.requested_outputs = outputs;
  const CompositionPlan plan = resolve(loaded.model, query, loaded.config.planner);
  out << render_plan(plan, *output_format_from_string(format_name));
  return 0;
}

int cmd_apsp(const std::string& matrix_path, std::ostream& out) {
  const Matrix adjacency = Matrix::parse(read_file(matrix_path));
  const ApspTables tables = floyd_warshall(adjacency);
  out << "dist:\n" << tables.dist.to_text();
  out << "pred:\n" << format_pred(tables);
  return 0;
}

int cmd_validate(const std::string& registry_path, const std::string& hierarchy_path,
                 std::ostream& out) {
  const std::string hierarchy_text = read_file(hierarchy_path);
  const std::string registry_text = read_file(registry_path);

  std::vector<std::string> findings;
  for (const auto& finding : collect_hierarchy_findings(hierarchy_text)) {
    findings.push_back("hierarchy: " + finding);
  }
  ConceptHierarchy hierarchy;
  const ConceptHierarchy* hierarchy_ptr = nullptr;
  if (findings.empty()) {
    hierarchy = load_hierarchy(hierarchy_text);
    hierarchy_ptr = &hierarchy;
    out << "hierarchy: " << hierarchy.size() << " concepts\n";
  }
  for (const auto& finding : collect_registry_findings(registry_text, hierarchy_ptr)) {
    findings.push_back("registry: " + finding);
  }
  if (findings.empty()) {
    out << "registry: " << parse_services(registry_text).size() << " services\n";
  }
  for (const auto& finding : findings) {
    out << "finding: " << finding << "\n";
  }
  out << "findings: " << findings.size() << "\n";
  return findings.empty() ? 0 : static_cast<int>(ExitCode::Validation);
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed, double density,
              int repetitions, std::ostream& out) {
  for (const std::size_t n : sizes) {
    if (n == 0) {
      throw Error(ExitCode::Usage, "bench sizes must be positive");
    }
  }
  for (const std::size_t n : sizes) {
    out << format_bench_row(run_bench_case(n, seed, density, repetitions)) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"service composition planning toolkit"};
  app.require_subcommand(1);

  std::string registry_path;
  std::string hierarchy_path;
  std::string config_path;
  std::string output_path;
  std::string model_path;
  std::string matrix_path;
  std::string format_name = "plain";
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 42;
  double density = 0.3;
  int repetitions = 3;

  CLI::App* build = app.add_subcommand("build", "Build a model artifact from files");
  build->add_option("--registry", registry_path, "Registry document")->required();
  build->add_option("--hierarchy", hierarchy_path, "Concept hierarchy document")
      ->required();
  build->add_option("--config", config_path, "Weight/matching configuration")
      ->required();
  build->add_option("--output", output_path, "Model artifact destination")->required();

  CLI::App* query = app.add_subcommand("query", "Resolve a composition query");
  query->add_option("--model", model_path, "Model artifact")->required();
  query->add_option("--inputs", inputs, "Provided input concepts")
      ->required()
      ->delimiter(',');
  query->add_option("--outputs", outputs, "Requested output concepts")
      ->required()
      ->delimiter(',');
  query->add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "structured", "dot"}));

  CLI::App* apsp = app.add_subcommand("apsp", "All-pairs tables for a raw matrix");
  apsp->add_option("--matrix", matrix_path, "Adjacency matrix file")->required();

  CLI::App* validate = app.add_subcommand("validate", "Check documents for problems");
  validate->add_option("--registry", registry_path, "Registry document")->required();
  validate->add_option("--hierarchy", hierarchy_path, "Concept hierarchy document")
      ->required();

  CLI::App* bench = app.add_subcommand("bench", "Time both all-pairs strategies");
  bench->add_option("--sizes", sizes, "Vertex counts to measure")
      ->required()
      ->delimiter(',');
  bench->add_option("--seed", seed, "Random graph seed");
  bench->add_option("--density", density, "Edge probability")
      ->check(CLI::Range(0.0, 1.0));
  bench->add_option("--reps", repetitions, "Repetitions per size (best kept)")
      ->check(CLI::Range(1, 100));

  try {
    std::vector<const char*> argv;
    argv.push_back("svcplan");
    for (const auto& arg : args) {
      argv.push_back(arg.c_str());
    }
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::Usage);
  }

  try {
    if (build->parsed()) {
      return cmd_build(registry_path, hierarchy_path, config_path, output_path, out);
    }
    if (query->parsed()) {
      return cmd_query(model_path, inputs, outputs, format_name, out);
    }
    if (apsp->parsed()) {
      return cmd_apsp(matrix_path, out);
    }
    if (validate->parsed()) {
      return cmd_validate(registry_path, hierarchy_path, out);
    }
    if (bench->parsed()) {
      return cmd_bench(sizes, seed, density, repetitions, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Validation);
  }
  return 0;
}

}  // namespace svcplan
