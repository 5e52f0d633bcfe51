// Command-line front end. Exit codes: 0 ok, 2 invalid parameters, 3 I/O
// failure, 4 a verification failed.
#include "acceptance.hpp"
#include "belyi/experiment.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>

namespace {

void error_json(const std::string& kind, const std::string& message, const std::string& path = {}) {
  nlohmann::ordered_json j{{"error", kind}, {"message", message}};
  if (!path.empty()) j["path"] = path;
  std::cerr << j.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  using belyi::ExperimentConfig;
  using belyi::OutputFormat;
  using belyi::Subcommand;

  CLI::App app{"Random oriented k-regular graphs, their faces and the symmetric group behind them"};
  app.require_subcommand(1);
  app.set_version_flag("--version", belyi::kToolVersion);

  ExperimentConfig c;
  std::string format = "csv";
  const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", c.master_seed, "master seed (64-bit)");
    sub->add_option("--workers", c.workers, "OpenMP threads (0 = default)");
    sub->add_option("--out", c.output, "output directory (overridden by BELYI_OUT_DIR)");
    sub->add_option("--format", format, "data file format")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* simulate = app.add_subcommand("simulate", "sample face spectra of random oriented graphs");
  simulate->add_option("--n", c.n, "vertices");
  simulate->add_option("--k", c.k, "regularity");
  simulate->add_option("--trials", c.trials, "number of graphs");
  common(simulate);

  auto* mixing = app.add_subcommand("mixing", "exact law of beta*alpha and its distance to uniform");
  mixing->add_option("--N", c.N, "degree");
  mixing->add_option("--k", c.k, "cycle length of beta");
  common(mixing);

  auto* character = app.add_subcommand("character", "dimensions, characters and table checks");
  character->add_option("--N", c.N, "degree");
  character->add_flag("--table1", c.table1, "check the six low rows of the published table");
  character->add_flag("--table", c.dump_table, "dump the full character table");
  character->add_option("--lambda", c.lambda, "shape, e.g. 5+5+3+2");
  character->add_option("--mu", c.mu, "class, e.g. 3+3+3+3");
  common(character);

  auto* pd = app.add_subcommand("pd-compare", "face counts, largest face and Poisson-Dirichlet comparison");
  pd->add_option("--n", c.n, "vertices");
  pd->add_option("--k", c.k, "regularity");
  pd->add_option("--trials", c.trials, "number of graphs (>= 10^4)");
  pd->add_option("--theta", c.theta, "Poisson-Dirichlet parameter");
  common(pd);

  auto* spectrum = app.add_subcommand("spectrum", "adjacency spectra against Kesten-McKay");
  spectrum->add_option("--n", c.n, "vertices");
  spectrum->add_option("--k", c.k, "regularity");
  spectrum->add_option("--graphs", c.graphs, "number of graphs");
  spectrum->add_option("--bins", c.bins, "histogram bins");
  spectrum->add_flag("--lambda2", c.second_eigenvalue, "collect second eigenvalues instead");
  common(spectrum);

  auto* bounds = app.add_subcommand("bounds", "partition, rim hook and dimension bounds");
  bounds->add_option("--N", c.N, "degree");
  bounds->add_option("--k", c.k, "rim hook length");
  bounds->add_option("--m", c.m, "margin of the dimension sum");
  bounds->add_option("--t", c.t, "exponent of the dimension sum");
  bounds->add_option("--r-max", c.r_max, "partition bound sweep limit");
  common(bounds);

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--criterion", c.criteria, "criterion ids (default: all)");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    error_json("validation", e.what());
    return 2;
  }

  const std::map<CLI::App*, Subcommand> commands{
      {simulate, Subcommand::Simulate}, {mixing, Subcommand::Mixing},     {character, Subcommand::Character},
      {pd, Subcommand::PdCompare},      {spectrum, Subcommand::Spectrum}, {bounds, Subcommand::Bounds},
      {verify, Subcommand::Verify}};
  c.subcommand = commands.at(app.get_subcommands().front());
  c.format = formats.at(format);

  try {
    const auto manifest = belyi::run(c, [](const std::vector<int>& ids) {
      return belyi::acceptance::run_criteria(ids, &std::cout);
    });
    std::cout << manifest.summary << '\n';
    return manifest.exit_code;
  } catch (const belyi::ValidationError& e) {
    error_json("validation", e.what());
    return 2;
  } catch (const belyi::IoError& e) {
    error_json("io", e.what(), e.path());
    return 3;
  } catch (const std::invalid_argument& e) {
    error_json("validation", e.what());
    return 2;
  } catch (const std::exception& e) {
    error_json("internal", e.what());
    return 1;
  }
}
