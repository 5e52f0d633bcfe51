#include "belyi/experiment.hpp"

#include "belyi/bounds.hpp"
#include "belyi/mixing.hpp"
#include "belyi/parallel.hpp"
#include "belyi/pd_stats.hpp"
#include "belyi/spectrum.hpp"
#include "belyi/symrep.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace belyi {

using nlohmann::ordered_json;

std::string to_string(Subcommand command) {
  switch (command) {
    case Subcommand::Simulate: return "simulate";
    case Subcommand::Mixing: return "mixing";
    case Subcommand::Character: return "character";
    case Subcommand::PdCompare: return "pd-compare";
    case Subcommand::Spectrum: return "spectrum";
    case Subcommand::Bounds: return "bounds";
    case Subcommand::Verify: return "verify";
  }
  return "unknown";
}

std::string to_string(OutputFormat format) { return format == OutputFormat::Csv ? "csv" : "json"; }

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

void require_graph(const ExperimentConfig& c) {
  require(c.n >= 1 && c.n <= 10'000'000, "n must be in [1, 10^7]");
  require(c.k >= 2 && c.k <= 64, "k must be in [2, 64]");
  require((static_cast<long long>(c.n) * c.k) % 2 == 0, "k*n must be even");
}

}  // namespace

void validate(const ExperimentConfig& c) {
  require(c.workers >= 0, "workers must be >= 0");
  switch (c.subcommand) {
    case Subcommand::Simulate:
      require_graph(c);
      require(c.trials >= 1 && c.trials <= 100'000'000, "trials must be in [1, 10^8]");
      break;
    case Subcommand::Mixing:
      require(c.N >= 2 && c.N <= 36, "N must be in [2, 36]");
      require(c.N % 2 == 0, "N must be even");
      require(c.k >= 1 && c.N % c.k == 0, "k must divide N");
      break;
    case Subcommand::Character: {
      require(c.N >= 1 && c.N <= kMaxCharacterDegree, "N must be in [1, " + std::to_string(kMaxCharacterDegree) + "]");
      require(c.table1 || c.dump_table || !c.lambda.empty(), "character needs --table1, --table or --lambda");
      if (c.table1) require(c.N >= 6, "--table1 needs N >= 6");
      if (c.dump_table) require(c.N <= 24, "--table needs N <= 24");
      if (!c.lambda.empty()) {
        Partition lambda;
        try {
          lambda = Partition::parse(c.lambda);
        } catch (const std::exception& e) {
          throw ValidationError(std::string("lambda: ") + e.what());
        }
        require(lambda.size() == c.N, "lambda must be a partition of N");
        if (!c.mu.empty()) {
          Partition mu;
          try {
            mu = Partition::parse(c.mu);
          } catch (const std::exception& e) {
            throw ValidationError(std::string("mu: ") + e.what());
          }
          require(mu.size() == c.N, "mu must be a partition of N");
        }
      } else {
        require(c.mu.empty(), "--mu needs --lambda");
      }
      break;
    }
    case Subcommand::PdCompare:
      require_graph(c);
      require(c.trials >= 10000 && c.trials <= 10'000'000, "trials must be in [10^4, 10^7]");
      require(c.theta > 0.0 && std::isfinite(c.theta), "theta must be positive");
      break;
    case Subcommand::Spectrum:
      require_graph(c);
      require(c.n >= 2 && c.n <= 4096, "n must be in [2, 4096] for dense eigensolves");
      require(c.graphs >= 1 && c.graphs <= 100000, "graphs must be in [1, 10^5]");
      require(c.bins >= 1 && c.bins <= 10000, "bins must be in [1, 10^4]");
      break;
    case Subcommand::Bounds:
      require(c.N >= 1 && c.N <= 60, "N must be in [1, 60]");
      require(c.k >= 1, "k must be >= 1");
      require(c.m >= 1, "m must be >= 1");
      require(c.t > 0.0 && std::isfinite(c.t), "t must be positive");
      require(c.r_max >= 1 && c.r_max <= 500, "r_max must be in [1, 500]");
      break;
    case Subcommand::Verify:
      for (int id : c.criteria) require(id >= 1 && id <= 13, "criteria ids are 1..13");
      break;
  }
}

std::string output_directory(const ExperimentConfig& config) {
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') return env;
  return config.output;
}

namespace {

class Writer {
 public:
  explicit Writer(std::string dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw IoError(dir_, "cannot create output directory (" + ec.message() + ")");
  }

  void write(const std::string& name, const std::string& content) {
    const auto path = (std::filesystem::path(dir_) / name).string();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path, "cannot open for writing");
    out << content;
    out.close();
    if (!out) throw IoError(path, "write failed");
    files_.push_back(path);
  }

  const std::vector<std::string>& files() const { return files_; }

 private:
  std::string dir_;
  std::vector<std::string> files_;
};

std::ostringstream csv_stream() {
  std::ostringstream out;
  out << std::setprecision(17);
  return out;
}

std::string fraction(const Rational& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

std::string tag(const ExperimentConfig& c, const std::string& prefix) {
  return prefix + "_n" + std::to_string(c.n) + "_k" + std::to_string(c.k) + "_seed" + std::to_string(c.master_seed);
}

ordered_json moments_json(const stats::Moments& m) {
  return {{"count", m.count}, {"mean", m.mean}, {"variance", m.variance}, {"se_mean", m.se_mean},
          {"se_variance", m.se_variance}};
}

void run_simulate(const ExperimentConfig& c, Writer& w, RunManifest& r) {
  const auto spectra = sample_face_spectra(c.n, c.k, c.trials, c.master_seed);
  if (c.format == OutputFormat::Csv) {
    auto out = csv_stream();
    write_face_spectra_csv(out, spectra, c.master_seed);
    w.write(tag(c, "faces") + ".csv", out.str());
  } else {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < spectra.size(); ++i) {
      const auto& s = spectra[i];
      rows.push_back({{"seed", trial_seed(c.master_seed, i)}, {"n", s.vertices}, {"k", s.regularity},
                      {"l", s.face_count}, {"L", s.largest}, {"genus", s.genus}, {"face_lengths", s.lengths}});
    }
    w.write(tag(c, "faces") + ".json", rows.dump(1) + "\n");
  }
  std::vector<double> l;
  for (const auto& s : spectra) l.push_back(s.face_count);
  const auto m = stats::moments(l);
  std::ostringstream s;
  s << std::setprecision(6) << "simulated " << c.trials << " surfaces (n=" << c.n << ", k=" << c.k
    << "): mean faces " << m.mean << ", variance " << m.variance;
  r.summary = s.str();
}

void run_mixing(const ExperimentConfig& c, Writer& w, RunManifest& r) {
  const auto law = exact_convolution_law(c.N, c.k);
  const std::string suffix = "_N" + std::to_string(c.N) + "_k" + std::to_string(c.k);
  if (c.format == OutputFormat::Csv) {
    std::ostringstream out;
    write_law_csv(out, law);
    w.write("law" + suffix + ".csv", out.str());
  } else {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < law.types.size(); ++i) {
      const auto& p = law.probabilities[i];
      if (p == 0) continue;
      rows.push_back({{"mu", law.types[i].to_string()}, {"probability", fraction(p)}});
    }
    w.write("law" + suffix + ".json", rows.dump(1) + "\n");
  }
  MixingReport report;
  report.n = c.N;
  report.part = c.k;
  report.coset = law.coset;
  report.tv_exact = tv_to_uniform(law);
  report.ds_bound = ds_upper_bound(c.N, c.k).bound;
  const auto json = to_json(report);
  w.write("mixing" + suffix + ".json", json + "\n");
  r.summary = json;
}

void run_character(const ExperimentConfig& c, Writer& w, RunManifest& r) {
  std::ostringstream summary;
  const std::string suffix = "_N" + std::to_string(c.N);
  if (c.table1) {
    const auto report = table1_verify(c.N);
    ordered_json cells = ordered_json::array();
    for (const auto& cell : report.cells) {
      cells.push_back({{"row", cell.row}, {"column", cell.column}, {"lambda", cell.lambda.to_string()},
                       {"printed", cell.printed.str()}, {"computed", cell.computed.str()}, {"sign", cell.sign},
                       {"match", cell.match}});
    }
    ordered_json j{{"N", c.N}, {"cells", cells}, {"mismatches", report.mismatches},
                   {"pass", report.mismatches == 0}};
    w.write("table1" + suffix + ".json", j.dump(2) + "\n");
    summary << "table check N=" << c.N << ": " << report.cells.size() - report.mismatches << "/"
            << report.cells.size() << " cells match\n";
    for (const auto& cell : report.cells) {
      summary << "  " << (cell.match ? "ok       " : "MISMATCH ") << cell.row << " " << cell.column
              << ": printed " << cell.printed << ", computed " << cell.computed;
      if (cell.column != "f") summary << " (sign " << (cell.sign > 0 ? "+" : cell.sign < 0 ? "-" : "0") << ")";
      summary << "\n";
    }
    if (report.mismatches != 0) r.exit_code = 4;
  }
  if (c.dump_table) {
    const auto table = character_table(c.N);
    if (c.format == OutputFormat::Csv) {
      std::ostringstream out;
      write_character_table_csv(out, table);
      w.write("characters" + suffix + ".csv", out.str());
    } else {
      ordered_json rows = ordered_json::array();
      for (std::size_t i = 0; i < table.labels.size(); ++i)
        for (std::size_t j = 0; j < table.labels.size(); ++j)
          rows.push_back({{"lambda", table.labels[i].to_string()}, {"mu", table.labels[j].to_string()},
                          {"chi", table.values[i][j].str()}});
      w.write("characters" + suffix + ".json", rows.dump(1) + "\n");
    }
    summary << "character table of S_" << c.N << ": " << table.labels.size() << " classes\n";
  }
  if (!c.lambda.empty()) {
    const auto lambda = Partition::parse(c.lambda);
    ordered_json j{{"lambda", lambda.to_string()}, {"dimension", dimension(lambda).str()}};
    summary << "f^" << lambda.to_string() << " = " << dimension(lambda);
    if (!c.mu.empty()) {
      const auto mu = Partition::parse(c.mu);
      const auto chi = mn_character(lambda, mu);
      j["mu"] = mu.to_string();
      j["chi"] = chi.str();
      summary << ", chi(" << mu.to_string() << ") = " << chi;
    }
    summary << "\n";
    w.write("character" + suffix + ".json", j.dump(2) + "\n");
  }
  r.summary = summary.str();
}

void run_pd_compare(const ExperimentConfig& c, Writer& w, RunManifest& r) {
  const auto sample = sample_faces(c.n, c.k, c.trials, c.master_seed);
  {
    std::ostringstream out;
    write_face_sample_csv(out, sample);
    w.write(tag(c, "face_sample") + ".csv", out.str());
  }
  const auto fc = face_count_stats(sample);
  const auto clt = clt_check(sample);
  const auto ratio = largest_face_ratio(sample);
  const double gd = golomb_dickman_constant();
  const auto pd = pd_distance(ranked_tops(sample), c.theta, mix64(c.master_seed ^ 0x50445F5245464552ULL));

  ordered_json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["trials"] = c.trials;
  j["faces"] = moments_json(fc.faces);
  j["predicted_mean"] = fc.predicted_mean;
  j["predicted_variance"] = fc.predicted_variance;
  j["clt"] = {{"center", clt.center},
              {"scale", clt.scale},
              {"ks_raw", clt.ks_raw},
              {"ks_midpoint", clt.ks_midpoint},
              {"standardized", moments_json(clt.standardized)},
              {"genus", moments_json(clt.genus)},
              {"predicted_genus_mean", clt.predicted_genus_mean},
              {"implied_genus_mean", clt.implied_genus_mean},
              {"implied_genus_sd", clt.implied_genus_sd},
              {"genus_nonnegative", clt.genus_nonnegative},
              {"genus_mismatches", clt.genus_mismatches}};
  j["largest_ratio"] = {{"mean", ratio.mean}, {"se", ratio.se}};
  j["golomb_dickman"] = gd;
  j["pd"] = ordered_json::parse(to_json(pd));
  w.write(tag(c, "pd_compare") + ".json", j.dump(2) + "\n");

  std::ostringstream s;
  s << std::setprecision(6) << "faces: mean " << fc.faces.mean << " (predicted " << fc.predicted_mean
    << "), variance " << fc.faces.variance << " (predicted " << fc.predicted_variance << ")\n"
    << "largest face fraction " << ratio.mean << " +/- " << ratio.se << " (constant " << gd << ")\n"
    << "KS vs PD(" << c.theta << ") largest mass " << pd.ks << " (99% null " << pd.ks_critical_99 << ")";
  r.summary = s.str();
}

void run_spectrum(const ExperimentConfig& c, Writer& w, RunManifest& r) {
  const std::string base = tag(c, "spectrum");
  ordered_json j{{"n", c.n}, {"k", c.k}, {"graphs", c.graphs}};
  std::ostringstream s;
  s << std::setprecision(6);
  if (c.second_eigenvalue) {
    const auto sample = collect_second_eigenvalues(c.n, c.k, c.graphs, c.master_seed);
    auto out = csv_stream();
    out << "sample,lambda2\n";
    for (std::size_t i = 0; i < sample.lambda2.size(); ++i) out << i << ',' << sample.lambda2[i] << '\n';
    w.write(base + "_lambda2.csv", out.str());
    const auto m = stats::moments(sample.lambda2);
    j["lambda2"] = moments_json(m);
    j["ramanujan_bound"] = 2.0 * std::sqrt(c.k - 1.0);
    j["disconnected_redraws"] = sample.disconnected_redraws;
    s << "lambda2 mean " << m.mean << " (2 sqrt(k-1) = " << 2.0 * std::sqrt(c.k - 1.0) << ")";
  } else {
    const auto h = spectral_histogram(c.n, c.k, c.graphs, c.bins, c.master_seed);
    const auto masses = kesten_mckay_bin_masses(c.k, c.bins);
    auto out = csv_stream();
    out << "bin,lower,upper,fraction,kesten_mckay_mass\n";
    const double width = (h.upper - h.lower) / c.bins;
    for (int b = 0; b < c.bins; ++b)
      out << b << ',' << h.lower + b * width << ',' << h.lower + (b + 1) * width << ','
          << h.fractions[static_cast<std::size_t>(b)] << ',' << masses[static_cast<std::size_t>(b)] << '\n';
    w.write(base + "_histogram.csv", out.str());
    j["bins"] = c.bins;
    j["eigenvalues"] = h.eigenvalue_count;
    j["outside"] = h.outside;
    j["l1_distance"] = h.l1_distance;
    s << "L1 distance to Kesten-McKay " << h.l1_distance << " over " << h.eigenvalue_count << " eigenvalues";
  }
  w.write(base + ".json", j.dump(2) + "\n");
  r.summary = s.str();
}

ordered_json tally_json(const LowerBoundTally& t) {
  ordered_json failures = ordered_json::array();
  for (const auto& f : t.failures)
    failures.push_back({{"lambda", f.lambda.to_string()}, {"log_dimension", f.log_dimension},
                        {"log_bound", f.log_bound}});
  return {{"applicable", t.applicable}, {"holding", t.holding}, {"failures", failures}};
}

void run_bounds(const ExperimentConfig& c, Writer& w, RunManifest& r) {
  ordered_json j{{"N", c.N}, {"k", c.k}, {"m", c.m}, {"t", c.t}};
  std::ostringstream s;
  s << std::setprecision(6);

  const auto pb = partition_count_bound_check(c.r_max);
  j["partition_bound"] = {{"r_max", pb.r_max}, {"holds", pb.holds}, {"max_ratio", pb.max_ratio},
                          {"argmax", pb.argmax}, {"violations", pb.violations}};
  s << "partition bound r<=" << c.r_max << ": " << (pb.holds ? "holds" : "fails") << " (max ratio "
    << pb.max_ratio << " at r=" << pb.argmax << ")\n";

  if (c.N <= 24 && c.N % c.k == 0) {
    const auto fl = fomin_lulov_check(c.N, c.k);
    ordered_json violations = ordered_json::array();
    for (const auto& v : fl.violations) violations.push_back(v.to_string());
    j["rim_hook_bound"] = {{"checked", fl.checked}, {"holding", fl.holding}, {"tightest_ratio", fl.tightest_ratio},
                           {"tightest", fl.tightest.to_string()}, {"violations", violations}};
    s << "rim hook bound N=" << c.N << " k=" << c.k << ": " << fl.holding << "/" << fl.checked << " hold\n";
  }

  const auto lb = dimension_lower_bounds_check(std::min(c.N, 64));
  j["lower_bounds"] = {{"partitions", lb.partitions}, {"binomial", tally_json(lb.binomial)},
                       {"factorial", tally_json(lb.factorial)}, {"exponential", tally_json(lb.exponential)}};
  s << "dimension lower bounds N=" << c.N << ": binomial " << lb.binomial.holding << "/" << lb.binomial.applicable
    << ", factorial " << lb.factorial.holding << "/" << lb.factorial.applicable << ", exponential "
    << lb.exponential.holding << "/" << lb.exponential.applicable << "\n";

  const auto sum = prop42_sum(c.N, c.m, c.t);
  j["dimension_sum"] = {{"value", to_decimal(sum, 30)}, {"approx", static_cast<double>(sum)}};
  s << "sum of f^-t (m=" << c.m << ", t=" << c.t << "): " << to_decimal(sum, 20);

  w.write("bounds_N" + std::to_string(c.N) + ".json", j.dump(2) + "\n");
  r.summary = s.str();
}

void run_verify(const ExperimentConfig& c, const AcceptanceRunner& verify, Writer& w, RunManifest& r) {
  if (!verify) throw std::logic_error("verify: no acceptance runner supplied");
  r.criteria = verify(c.criteria);
  ordered_json rows = ordered_json::array();
  std::ostringstream s;
  int failed = 0;
  for (const auto& o : r.criteria) {
    rows.push_back({{"id", o.id}, {"name", o.name}, {"pass", o.pass}, {"detail", o.detail}, {"seconds", o.seconds}});
    if (!o.pass) ++failed;
  }
  w.write("verify.json", ordered_json{{"criteria", rows}, {"failed", failed}}.dump(2) + "\n");
  s << r.criteria.size() - failed << "/" << r.criteria.size() << " criteria pass";
  r.summary = s.str();
  if (failed != 0) r.exit_code = 4;
}

}  // namespace

RunManifest run(const ExperimentConfig& config, const AcceptanceRunner& verify) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  set_worker_count(config.workers);
  RunManifest manifest;
  manifest.config = config;
  manifest.output_directory = output_directory(config);
  Writer writer(manifest.output_directory);
  switch (config.subcommand) {
    case Subcommand::Simulate: run_simulate(config, writer, manifest); break;
    case Subcommand::Mixing: run_mixing(config, writer, manifest); break;
    case Subcommand::Character: run_character(config, writer, manifest); break;
    case Subcommand::PdCompare: run_pd_compare(config, writer, manifest); break;
    case Subcommand::Spectrum: run_spectrum(config, writer, manifest); break;
    case Subcommand::Bounds: run_bounds(config, writer, manifest); break;
    case Subcommand::Verify: run_verify(config, verify, writer, manifest); break;
  }
  manifest.files = writer.files();
  manifest.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  writer.write(to_string(config.subcommand) + ".manifest.json", to_json(manifest) + "\n");
  manifest.files = writer.files();
  return manifest;
}

std::string to_json(const ExperimentConfig& c) {
  ordered_json j{{"subcommand", to_string(c.subcommand)},
                 {"n", c.n},
                 {"k", c.k},
                 {"trials", c.trials},
                 {"theta", c.theta},
                 {"N", c.N},
                 {"m", c.m},
                 {"t", c.t},
                 {"master_seed", c.master_seed},
                 {"workers", c.workers},
                 {"output", c.output},
                 {"format", to_string(c.format)},
                 {"table1", c.table1},
                 {"table", c.dump_table},
                 {"lambda", c.lambda},
                 {"mu", c.mu},
                 {"graphs", c.graphs},
                 {"bins", c.bins},
                 {"second_eigenvalue", c.second_eigenvalue},
                 {"r_max", c.r_max},
                 {"criteria", c.criteria}};
  return j.dump(2);
}

std::string to_json(const RunManifest& m) {
  ordered_json criteria = ordered_json::array();
  for (const auto& o : m.criteria)
    criteria.push_back({{"id", o.id}, {"name", o.name}, {"pass", o.pass}, {"seconds", o.seconds}});
  ordered_json j{{"config", ordered_json::parse(to_json(m.config))},
                 {"tool_version", m.tool_version},
                 {"rng", "xoshiro256** seeded by SplitMix64"},
                 {"output_directory", m.output_directory},
                 {"wall_seconds", m.wall_seconds},
                 {"files", m.files},
                 {"criteria", criteria},
                 {"exit_code", m.exit_code}};
  return j.dump(2);
}

}  // namespace belyi
