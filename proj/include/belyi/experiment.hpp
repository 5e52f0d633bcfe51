#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace belyi {

inline constexpr const char* kToolVersion = "1.0.0";
/// Environment variable that, when set, replaces the configured output directory.
inline constexpr const char* kOutputDirEnv = "BELYI_OUT_DIR";

enum class Subcommand { Simulate, Mixing, Character, PdCompare, Spectrum, Bounds, Verify };
enum class OutputFormat { Csv, Json };

std::string to_string(Subcommand command);
std::string to_string(OutputFormat format);

struct ExperimentConfig {
  Subcommand subcommand = Subcommand::Simulate;
  int n = 2048;               // vertices
  int k = 3;                  // regularity / rectangular class part
  std::uint64_t trials = 20000;
  double theta = 1.0;
  int N = 12;                 // symmetric group degree
  int m = 4;                  // margin of the dimension sum
  double t = 1.0 / 3.0;       // exponent of the dimension sum
  std::uint64_t master_seed = 42;
  int workers = 0;            // 0: OpenMP default
  std::string output = "out";
  OutputFormat format = OutputFormat::Csv;

  // character
  bool table1 = false;
  bool dump_table = false;
  std::string lambda;
  std::string mu;
  // spectrum
  int graphs = 50;
  int bins = 40;
  bool second_eigenvalue = false;
  // bounds
  int r_max = 500;
  // verify: empty runs every criterion
  std::vector<int> criteria;
};

/// Precondition violation; exit status 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Failure to create or write an output file; exit status 3.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(what + ": " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Checks every parameter the selected subcommand uses before any work starts.
void validate(const ExperimentConfig& config);

struct CriterionOutcome {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct RunManifest {
  ExperimentConfig config;
  std::string tool_version = kToolVersion;
  std::string output_directory;
  double wall_seconds = 0.0;
  std::vector<std::string> files;
  std::vector<CriterionOutcome> criteria;
  /// Human summary printed by the CLI.
  std::string summary;
  int exit_code = 0;
};

/// Runs the given acceptance criteria (empty = all). Supplied by the caller of
/// run() so the core library carries no test oracles.
using AcceptanceRunner = std::function<std::vector<CriterionOutcome>(const std::vector<int>&)>;

/// Output directory after applying the environment override.
std::string output_directory(const ExperimentConfig& config);

/// Validates, executes, writes data files and "<subcommand>.manifest.json".
/// Throws ValidationError or IoError. exit_code is 4 when a verification
/// (acceptance suite or table check) fails, else 0.
RunManifest run(const ExperimentConfig& config, const AcceptanceRunner& verify = {});

std::string to_json(const ExperimentConfig& config);
std::string to_json(const RunManifest& manifest);

}  // namespace belyi
