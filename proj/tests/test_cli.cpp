#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support/fixtures.hpp"
#include "svcplan/cli.hpp"

using namespace svcplan;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Scratch directory under the test working directory.
std::filesystem::path scratch() {
  const auto dir = std::filesystem::path("cli_scratch");
  std::filesystem::create_directories(dir);
  return dir;
}

std::string build_rcar_model_file() {
  const auto model_path = (scratch() / "rcar_model.json").string();
  const CliResult result = run({"build",
                                "--registry", testsupport::fixture_path("rcar_registry.json"),
                                "--hierarchy", testsupport::fixture_path("rcar_hierarchy.json"),
                                "--config", testsupport::fixture_path("rcar_config_raw.json"),
                                "--output", model_path});
  REQUIRE(result.code == 0);
  return model_path;
}

}  // namespace

TEST_CASE("build writes a model artifact and reports its shape") {
  const auto model_path = build_rcar_model_file();
  const CliResult result = run({"build",
                                "--registry", testsupport::fixture_path("rcar_registry.json"),
                                "--hierarchy", testsupport::fixture_path("rcar_hierarchy.json"),
                                "--config", testsupport::fixture_path("rcar_config_raw.json"),
                                "--output", model_path});
  CHECK(result.code == 0);
  CHECK(result.out.find("8 services, 13 edges, revision 1") != std::string::npos);
  CHECK(std::filesystem::file_size(model_path) > 0);
}

TEST_CASE("build rejects malformed documents with a validation exit") {
  const auto bad = (scratch() / "broken_registry.json").string();
  std::ofstream(bad) << R"([{"id":"V1"}])";
  const CliResult result = run({"build",
                                "--registry", bad,
                                "--hierarchy", testsupport::fixture_path("rcar_hierarchy.json"),
                                "--config", testsupport::fixture_path("rcar_config_raw.json"),
                                "--output", (scratch() / "never.json").string()});
  CHECK(result.code == 2);
  CHECK(result.err.find("error:") != std::string::npos);
}

TEST_CASE("query answers the fixture request with the published costs") {
  const auto model_path = build_rcar_model_file();
  const CliResult result = run({"query", "--model", model_path,
                                "--inputs", "Credential",
                                "--outputs",
                                "MembershipCertificate,PensionStatement,ProfileUpdateAck"});
  CHECK(result.code == 0);
  CHECK(result.out.find("cost 7") != std::string::npos);
  CHECK(result.out.find("goal ProfileUpdateAck: path V1 -> V4, cost 4") !=
        std::string::npos);

  const CliResult structured = run({"query", "--model", model_path,
                                    "--inputs", "Credential",
                                    "--outputs", "ProfileUpdateAck",
                                    "--format", "structured"});
  CHECK(structured.code == 0);
  const auto doc = nlohmann::json::parse(structured.out);
  CHECK(doc["goals"][0]["cost"] == 4.0);

  const CliResult dot = run({"query", "--model", model_path,
                             "--inputs", "Credential",
                             "--outputs", "ProfileUpdateAck",
                             "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph plan") != std::string::npos);
}

TEST_CASE("query exit codes distinguish the failure modes") {
  const auto model_path = build_rcar_model_file();

  const CliResult no_entry = run({"query", "--model", model_path,
                                  "--inputs", "MembershipCertificate",
                                  "--outputs", "ProfileUpdateAck"});
  CHECK(no_entry.code == 3);

  const CliResult unsatisfiable = run({"query", "--model", model_path,
                                       "--inputs", "Credential",
                                       "--outputs", "NoSuchConcept"});
  CHECK(unsatisfiable.code == 4);

  const CliResult unreachable = run({"query", "--model", model_path,
                                     "--inputs", "Credential",
                                     "--outputs", "IssuedCredential"});
  CHECK(unreachable.code == 5);
}

TEST_CASE("apsp prints both tables for a raw matrix") {
  const CliResult result =
      run({"apsp", "--matrix", testsupport::fixture_path("matrix3.txt")});
  CHECK(result.code == 0);
  CHECK(result.out.find("dist:\n0 5 inf 4 12 7 6 6\n") != std::string::npos);
  CHECK(result.out.find("pred:\n") != std::string::npos);
  CHECK(result.out.find("null 1 null 1 6 8 2 2\n") != std::string::npos);
}

TEST_CASE("apsp reports negative cycles with the dedicated exit code") {
  const auto bad = (scratch() / "negative.txt").string();
  std::ofstream(bad) << "0 -1\n-1 0\n";
  const CliResult result = run({"apsp", "--matrix", bad});
  CHECK(result.code == 6);
  CHECK(result.err.find("negative cycle") != std::string::npos);
}

TEST_CASE("validate reports zero findings for the fixtures") {
  const CliResult clean = run({"validate",
                               "--registry", testsupport::fixture_path("rcar_registry.json"),
                               "--hierarchy", testsupport::fixture_path("rcar_hierarchy.json")});
  CHECK(clean.code == 0);
  CHECK(clean.out.find("findings: 0") != std::string::npos);

  const auto bad = (scratch() / "dup_registry.json").string();
  std::ofstream(bad) << R"([
    {"id":"A","name":"A","inputs":["Credential"],"outputs":["ProfileData"],
     "qos":{"cost":1,"time":1,"availability":0.5}},
    {"id":"A","name":"A2","inputs":["Credential"],"outputs":["ProfileData"],
     "qos":{"cost":1,"time":1,"availability":0.5}}
  ])";
  const CliResult dirty = run({"validate", "--registry", bad,
                               "--hierarchy", testsupport::fixture_path("rcar_hierarchy.json")});
  CHECK(dirty.code == 2);
  CHECK(dirty.out.find("duplicate service id 'A'") != std::string::npos);
}

TEST_CASE("bench emits one row per size") {
  const CliResult result = run({"bench", "--sizes", "16,32", "--seed", "7"});
  CHECK(result.code == 0);
  CHECK(result.out.find("n=16 ") != std::string::npos);
  CHECK(result.out.find("n=32 ") != std::string::npos);

  const CliResult zero = run({"bench", "--sizes", "0"});
  CHECK(zero.code == 1);
}

TEST_CASE("usage problems exit with code one") {
  CHECK(run({}).code == 1);
  CHECK(run({"no-such-command"}).code == 1);
  CHECK(run({"query", "--model"}).code == 1);
  CHECK(run({"query", "--model", "m", "--inputs", "a", "--outputs", "b",
             "--format", "yaml"})
            .code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("missing files surface as validation errors") {
  const CliResult result = run({"apsp", "--matrix", "/no/such/matrix.txt"});
  CHECK(result.code == 2);
  CHECK(result.err.find("cannot read file") != std::string::npos);
}

TEST_CASE("the installed binary behaves like the in-process entry point") {
  const auto out_path = (scratch() / "spawned.txt").string();
  const std::string command = std::string(CLI_BIN_PATH) + " apsp --matrix " +
                              testsupport::fixture_path("matrix3.txt") + " > " +
                              out_path;
  const int status = std::system(command.c_str());
  REQUIRE(status != -1);
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);

  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str().find("dist:\n0 5 inf 4 12 7 6 6\n") != std::string::npos);
}
