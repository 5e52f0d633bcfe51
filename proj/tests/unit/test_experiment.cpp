#include "belyi/experiment.hpp"

#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace belyi;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("belyi_unit_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

ExperimentConfig config(Subcommand command) {
  ExperimentConfig c;
  c.subcommand = command;
  return c;
}

}  // namespace

TEST_CASE("validation names the violated constraint") {
  auto c = config(Subcommand::Simulate);
  c.n = 5;
  CHECK_THROWS_WITH_AS(validate(c), "k*n must be even", ValidationError);
  c = config(Subcommand::Mixing);
  c.N = 13;
  CHECK_THROWS_AS(validate(c), ValidationError);
  c.N = 12;
  c.k = 5;
  CHECK_THROWS_WITH_AS(validate(c), "k must divide N", ValidationError);
  c = config(Subcommand::Character);
  CHECK_THROWS_AS(validate(c), ValidationError);
  c.lambda = "5+4";
  CHECK_THROWS_WITH_AS(validate(c), "lambda must be a partition of N", ValidationError);
  c = config(Subcommand::PdCompare);
  c.trials = 100;
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = config(Subcommand::Spectrum);
  c.n = 5000;
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = config(Subcommand::Verify);
  c.criteria = {14};
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = config(Subcommand::Bounds);
  c.workers = -1;
  CHECK_THROWS_AS(validate(c), ValidationError);
  c.workers = 0;
  CHECK_NOTHROW(validate(c));
}

TEST_CASE("simulate is deterministic and writes a manifest") {
  const auto dir = scratch("simulate");
  auto c = config(Subcommand::Simulate);
  c.n = 300;
  c.trials = 500;
  c.master_seed = 42;
  c.output = (dir / "a").string();
  c.workers = 1;
  const auto first = run(c);
  c.output = (dir / "b").string();
  c.workers = 4;
  const auto second = run(c);
  REQUIRE(first.files.size() == 2);
  CHECK(slurp(first.files[0]) == slurp(second.files[0]));
  CHECK(slurp(first.files[0]).rfind("seed,n,k,l,L,genus,face_lengths\n", 0) == 0);
  const auto manifest = nlohmann::json::parse(slurp(first.files[1]));
  CHECK(manifest["config"]["master_seed"] == 42);
  CHECK(manifest["config"]["subcommand"] == "simulate");
  CHECK(manifest["tool_version"] == kToolVersion);
  CHECK(manifest["files"].size() == 1);

  c.format = OutputFormat::Json;
  const auto json = run(c);
  CHECK(nlohmann::json::parse(slurp(json.files[0])).size() == 500);
  std::filesystem::remove_all(dir);
}

TEST_CASE("environment variable overrides the output directory") {
  const auto dir = scratch("env");
  setenv(kOutputDirEnv, dir.string().c_str(), 1);
  auto c = config(Subcommand::Mixing);
  c.output = "should_not_be_used";
  const auto m = run(c);
  unsetenv(kOutputDirEnv);
  CHECK(m.output_directory == dir.string());
  CHECK(std::filesystem::exists(dir / "law_N12_k3.csv"));
  const auto report = nlohmann::json::parse(slurp((dir / "mixing_N12_k3.json").string()));
  CHECK(report["tv_exact"].get<double>() <= report["ds_bound"].get<double>());
  CHECK(report["coset"] == "even");
  CHECK_FALSE(std::filesystem::exists("should_not_be_used"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("I/O failures carry the path") {
  const auto dir = scratch("io");
  std::filesystem::create_directories(dir);
  const auto blocker = dir / "file";
  std::ofstream(blocker) << "x";
  auto c = config(Subcommand::Mixing);
  c.output = (blocker / "sub").string();
  try {
    run(c);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(e.path().find("file") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("character subcommand reports the table check and exits 4 on differences") {
  const auto dir = scratch("character");
  auto c = config(Subcommand::Character);
  c.N = 12;
  c.table1 = true;
  c.lambda = "5+5+2";
  c.mu = "3+3+3+3";
  c.output = dir.string();
  const auto m = run(c);
  CHECK(m.exit_code == 4);
  const auto report = nlohmann::json::parse(slurp((dir / "table1_N12.json").string()));
  CHECK(report["cells"].size() == 24);
  const auto value = nlohmann::json::parse(slurp((dir / "character_N12.json").string()));
  CHECK(value["dimension"] == "1320");
  std::filesystem::remove_all(dir);
}

TEST_CASE("bounds and spectrum subcommands") {
  const auto dir = scratch("misc");
  auto c = config(Subcommand::Bounds);
  c.output = dir.string();
  CHECK(run(c).exit_code == 0);
  const auto bounds = nlohmann::json::parse(slurp((dir / "bounds_N12.json").string()));
  CHECK(bounds["partition_bound"]["holds"] == true);
  CHECK(bounds["rim_hook_bound"]["holding"] == 77);
  c = config(Subcommand::Spectrum);
  c.n = 100;
  c.graphs = 3;
  c.output = dir.string();
  const auto m = run(c);
  CHECK(m.files.size() == 3);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify delegates to the supplied runner") {
  const auto dir = scratch("verify");
  auto c = config(Subcommand::Verify);
  c.output = dir.string();
  c.criteria = {1, 2};
  const auto m = run(c, [](const std::vector<int>& ids) {
    std::vector<CriterionOutcome> out;
    for (int id : ids) out.push_back({id, "stub", id == 1, "", 0.0});
    return out;
  });
  CHECK(m.exit_code == 4);
  CHECK(m.criteria.size() == 2);
  CHECK_THROWS_AS(run(c), std::logic_error);
  std::filesystem::remove_all(dir);
}
