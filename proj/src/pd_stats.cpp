#include "belyi/pd_stats.hpp"

#include "belyi/parallel.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace belyi {

RankedMassVector gem_sample_unranked(double theta, int trunc, Rng& rng) {
  if (!(theta > 0.0)) throw std::invalid_argument("gem_sample: theta must be positive");
  if (trunc < 1) throw std::invalid_argument("gem_sample: trunc must be >= 1");
  RankedMassVector out;
  out.masses.reserve(static_cast<std::size_t>(trunc));
  double stick = 1.0;
  for (int i = 0; i < trunc; ++i) {
    const double u = uniform01_open_left(rng);
    const double b = theta == 1.0 ? u : 1.0 - std::pow(u, 1.0 / theta);
    out.masses.push_back(stick * b);
    stick *= 1.0 - b;
  }
  out.residual = stick;
  return out;
}

RankedMassVector gem_sample(double theta, int trunc, Rng& rng) {
  auto out = gem_sample_unranked(theta, trunc, rng);
  std::sort(out.masses.begin(), out.masses.end(), std::greater<>());
  return out;
}

RankedMassVector normalized_spectrum(const FaceSpectrum& spectrum) {
  RankedMassVector out;
  const double total = static_cast<double>(spectrum.vertices) * spectrum.regularity;
  out.masses.reserve(spectrum.lengths.size());
  for (int len : spectrum.lengths) out.masses.push_back(len / total);
  std::sort(out.masses.begin(), out.masses.end(), std::greater<>());
  return out;
}

double golomb_dickman_constant() {
  auto integrand = [](double x) {
    if (x <= 0.0) return 0.0;
    return std::exp(-x - boost::math::expint(1, x));
  };
  double error = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, 40.0, 15, 1e-13, &error);
  // exp(-E1) <= 1, so the tail past 40 is at most e^{-40}.
  error += std::exp(-40.0);
  if (!(error <= 1e-8))
    throw std::runtime_error("golomb_dickman_constant: quadrature error estimate " + std::to_string(error));
  return value;
}

namespace {

FaceRecord record_of(const FaceSpectrum& s) {
  FaceRecord r;
  r.faces = s.face_count;
  r.largest = s.largest;
  r.genus = s.genus;
  r.components = s.components;
  for (std::size_t j = 0; j < 3 && j < s.lengths.size(); ++j) r.top[j] = s.lengths[j];
  return r;
}

void check_sample_args(int vertices, int regularity, std::uint64_t trials) {
  if (vertices < 1 || regularity < 1 || (static_cast<long long>(vertices) * regularity) % 2 != 0)
    throw std::invalid_argument("sample_faces: need n >= 1, k >= 1, k*n even");
  if (trials < 1) throw std::invalid_argument("sample_faces: trials must be >= 1");
}

}  // namespace

FaceCountSample sample_faces(int vertices, int regularity, std::uint64_t trials, std::uint64_t seed) {
  check_sample_args(vertices, regularity, trials);
  FaceCountSample out{vertices, regularity, seed, std::vector<FaceRecord>(trials)};
#pragma omp parallel
  {
    FaceSampler sampler(vertices, regularity);
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(trials); ++i) {
      Rng rng = derive_stream(seed, static_cast<std::uint64_t>(i));
      out.records[static_cast<std::size_t>(i)] = record_of(sampler.sample(rng));
    }
  }
  return out;
}

FaceCountSample sample_faces_serial(int vertices, int regularity, std::uint64_t trials, std::uint64_t seed) {
  check_sample_args(vertices, regularity, trials);
  FaceCountSample out{vertices, regularity, seed, {}};
  out.records.reserve(trials);
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng = derive_stream(seed, i);
    out.records.push_back(record_of(faces(sample_oriented_graph(vertices, regularity, rng))));
  }
  return out;
}

std::vector<FaceSpectrum> sample_face_spectra(int vertices, int regularity, std::uint64_t trials,
                                              std::uint64_t seed) {
  check_sample_args(vertices, regularity, trials);
  std::vector<FaceSpectrum> out(trials);
#pragma omp parallel
  {
    FaceSampler sampler(vertices, regularity);
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(trials); ++i) {
      Rng rng = derive_stream(seed, static_cast<std::uint64_t>(i));
      out[static_cast<std::size_t>(i)] = sampler.sample(rng);
    }
  }
  return out;
}

void write_face_spectra_csv(std::ostream& out, const std::vector<FaceSpectrum>& spectra, std::uint64_t seed) {
  out << "seed,n,k,l,L,genus,face_lengths\n";
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    const auto& s = spectra[i];
    out << trial_seed(seed, i) << ',' << s.vertices << ',' << s.regularity << ',' << s.face_count << ','
        << s.largest << ',' << s.genus << ',';
    for (std::size_t j = 0; j < s.lengths.size(); ++j) out << (j ? ";" : "") << s.lengths[j];
    out << '\n';
  }
}

void write_face_sample_csv(std::ostream& out, const FaceCountSample& sample) {
  out << "trial,seed,n,k,l,L,genus\n";
  for (std::size_t i = 0; i < sample.records.size(); ++i) {
    const auto& r = sample.records[i];
    out << i << ',' << trial_seed(sample.seed, i) << ',' << sample.vertices << ',' << sample.regularity << ','
        << r.faces << ',' << r.largest << ',' << r.genus << '\n';
  }
}

FaceCountStats face_count_stats(const FaceCountSample& sample) {
  FaceCountStats out;
  out.trials = sample.records.size();
  std::vector<double> l;
  l.reserve(sample.records.size());
  for (const auto& r : sample.records) l.push_back(r.faces);
  out.faces = stats::moments(l);
  const double log_kn = std::log(static_cast<double>(sample.vertices) * sample.regularity);
  out.predicted_mean = log_kn + kEulerGamma;
  out.predicted_variance = log_kn + kEulerGamma - kZeta2;
  return out;
}

double harmonic_number(std::uint64_t n) {
  double h = 0.0;
  for (std::uint64_t i = n; i >= 1; --i) h += 1.0 / static_cast<double>(i);
  return h;
}

std::vector<int> sample_uniform_cycle_lengths(int degree, Rng& rng) {
  if (degree < 0) throw std::invalid_argument("sample_uniform_cycle_lengths: negative degree");
  std::vector<int> lengths;
  int remaining = degree;
  while (remaining > 0) {
    const int len = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(remaining)));
    lengths.push_back(len);
    remaining -= len;
  }
  return lengths;
}

CycleCountStats uniform_cycle_count_stats(int degree, std::uint64_t trials, std::uint64_t seed) {
  if (degree < 1 || trials < 2) throw std::invalid_argument("uniform_cycle_count_stats: need N >= 1, trials >= 2");
  const auto counts = map_trials<double>(trials, [&](std::uint64_t i) {
    Rng rng = derive_stream(seed, i);
    return static_cast<double>(sample_uniform_cycle_lengths(degree, rng).size());
  });
  return {stats::moments(counts), harmonic_number(static_cast<std::uint64_t>(degree))};
}

CltReport clt_check(const FaceCountSample& sample) {
  if (sample.records.size() < 10000) throw std::invalid_argument("clt_check: need at least 10^4 trials");
  CltReport out;
  out.trials = sample.records.size();
  const double n = sample.vertices;
  out.center = std::log(n * sample.regularity);
  out.scale = std::sqrt(out.center);
  std::vector<double> z, g;
  std::vector<int> l;
  z.reserve(out.trials);
  g.reserve(out.trials);
  l.reserve(out.trials);
  for (const auto& r : sample.records) {
    z.push_back((r.faces - out.center) / out.scale);
    g.push_back(r.genus);
    l.push_back(r.faces);
    if (r.genus < 0) out.genus_nonnegative = false;
    if (sample.regularity == 3) {
      const int twice = 4 * (r.components - 1) + 4 + sample.vertices - 2 * r.faces;
      if (twice != 4 * r.genus) ++out.genus_mismatches;
    }
  }
  out.standardized = stats::moments(z);
  out.genus = stats::moments(g);
  out.ks_raw = stats::ks_one_sample(z, stats::normal_cdf);
  const double center = out.center, scale = out.scale;
  out.ks_midpoint = stats::ks_lattice_midpoint(
      l, [center, scale](double v) { return (v - center) / scale; }, stats::normal_cdf);
  out.predicted_genus_mean = 1.0 + n / 4.0 - (out.center + kEulerGamma) / 2.0;
  out.implied_genus_mean = 1.0 + n / 4.0 - std::log(n) / 2.0;
  out.implied_genus_sd = std::sqrt(std::log(n)) / 2.0;
  return out;
}

namespace {

RatioEstimate ratio_estimate(const std::vector<double>& values) {
  const auto m = stats::moments(values);
  return {m.count, m.mean, m.se_mean};
}

}  // namespace

RatioEstimate largest_face_ratio(const FaceCountSample& sample) {
  if (sample.records.size() < 1000) throw std::invalid_argument("largest_face_ratio: need at least 10^3 trials");
  const double total = static_cast<double>(sample.vertices) * sample.regularity;
  std::vector<double> ratios;
  ratios.reserve(sample.records.size());
  for (const auto& r : sample.records) ratios.push_back(r.largest / total);
  return ratio_estimate(ratios);
}

RatioEstimate largest_cycle_ratio(int degree, std::uint64_t trials, std::uint64_t seed) {
  if (degree < 1 || trials < 2) throw std::invalid_argument("largest_cycle_ratio: need N >= 1, trials >= 2");
  const auto ratios = map_trials<double>(trials, [&](std::uint64_t i) {
    Rng rng = derive_stream(seed, i);
    const auto lengths = sample_uniform_cycle_lengths(degree, rng);
    return *std::max_element(lengths.begin(), lengths.end()) / static_cast<double>(degree);
  });
  return ratio_estimate(ratios);
}

std::vector<RankedTop> ranked_tops(const FaceCountSample& sample) {
  const double total = static_cast<double>(sample.vertices) * sample.regularity;
  std::vector<RankedTop> out;
  out.reserve(sample.records.size());
  for (const auto& r : sample.records) out.push_back({r.top[0] / total, r.top[1] / total, r.top[2] / total});
  return out;
}

namespace {

RankedTop pd_top(double theta, int trunc, std::uint64_t seed, std::uint64_t i) {
  Rng rng = derive_stream(seed, i);
  auto sample = gem_sample_unranked(theta, trunc, rng);
  std::partial_sort(sample.masses.begin(), sample.masses.begin() + std::min<std::size_t>(3, sample.masses.size()),
                    sample.masses.end(), std::greater<>());
  RankedTop top{};
  for (std::size_t j = 0; j < 3 && j < sample.masses.size(); ++j)
    top[j] = sample.masses[j] < 1e-9 ? 0.0 : sample.masses[j];
  return top;
}

}  // namespace

std::vector<RankedTop> pd_tops(double theta, std::uint64_t count, std::uint64_t seed, int trunc) {
  return map_trials<RankedTop>(count, [&](std::uint64_t i) { return pd_top(theta, trunc, seed, i); });
}

std::vector<RankedTop> pd_tops_serial(double theta, std::uint64_t count, std::uint64_t seed, int trunc) {
  return map_trials_serial<RankedTop>(count, [&](std::uint64_t i) { return pd_top(theta, trunc, seed, i); });
}

namespace {

std::vector<double> coordinate(const std::vector<RankedTop>& xs, std::size_t j) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x[j]);
  return out;
}

std::vector<double> resample(const std::vector<double>& xs, const std::vector<std::uint32_t>& idx) {
  std::vector<double> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(xs[i]);
  return out;
}

Interval percentile_interval(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const auto at = [&](double q) {
    const auto pos = static_cast<std::size_t>(std::floor(q * static_cast<double>(values.size() - 1)));
    return values[pos];
  };
  return {at(0.025), at(0.975)};
}

}  // namespace

PdDistanceReport pd_distance(const std::vector<RankedTop>& spectra, const std::vector<RankedTop>& reference,
                             double theta, std::uint64_t bootstrap_seed, int bootstrap) {
  if (spectra.size() < 10000) throw std::invalid_argument("pd_distance: need at least 10^4 spectra");
  if (reference.size() != spectra.size()) throw std::invalid_argument("pd_distance: sample sizes must match");
  if (bootstrap < 2) throw std::invalid_argument("pd_distance: need at least 2 bootstrap resamples");
  PdDistanceReport out;
  out.trials = spectra.size();
  out.theta = theta;
  std::array<std::vector<double>, 3> a, b;
  for (std::size_t j = 0; j < 3; ++j) {
    a[j] = coordinate(spectra, j);
    b[j] = coordinate(reference, j);
  }
  out.ks = stats::ks_two_sample(a[0], b[0]);
  out.ks_critical_99 = stats::ks_two_sample_critical(0.01, spectra.size(), reference.size());
  for (std::size_t j = 0; j < 3; ++j) out.wasserstein[j] = stats::wasserstein1(a[j], b[j]);

  // Resample index vectors are drawn serially per replicate; the statistics
  // of each replicate are then independent of scheduling.
  struct Replicate {
    double ks = 0.0;
    std::array<double, 3> w{};
  };
  const std::size_t size = spectra.size();
  const auto reps = map_trials<Replicate>(static_cast<std::uint64_t>(bootstrap), [&](std::uint64_t r) {
    Rng rng = derive_stream(bootstrap_seed, r);
    std::vector<std::uint32_t> ia(size), ib(size);
    for (auto& i : ia) i = static_cast<std::uint32_t>(uniform_below(rng, size));
    for (auto& i : ib) i = static_cast<std::uint32_t>(uniform_below(rng, size));
    Replicate rep;
    rep.ks = stats::ks_two_sample(resample(a[0], ia), resample(b[0], ib));
    for (std::size_t j = 0; j < 3; ++j) rep.w[j] = stats::wasserstein1(resample(a[j], ia), resample(b[j], ib));
    return rep;
  });
  std::vector<double> ks;
  std::array<std::vector<double>, 3> w;
  for (const auto& rep : reps) {
    ks.push_back(rep.ks);
    for (std::size_t j = 0; j < 3; ++j) w[j].push_back(rep.w[j]);
  }
  out.ks_ci = percentile_interval(ks);
  for (std::size_t j = 0; j < 3; ++j) out.wasserstein_ci[j] = percentile_interval(w[j]);
  return out;
}

PdDistanceReport pd_distance(const std::vector<RankedTop>& spectra, double theta, std::uint64_t pd_seed,
                             int bootstrap) {
  if (spectra.size() < 10000) throw std::invalid_argument("pd_distance: need at least 10^4 spectra");
  const auto reference = pd_tops(theta, spectra.size(), pd_seed);
  return pd_distance(spectra, reference, theta, mix64(pd_seed ^ 0xB0075743ULL), bootstrap);
}

std::string to_json(const PdDistanceReport& report) {
  nlohmann::ordered_json j;
  j["ks"] = report.ks;
  j["ks_ci"] = {report.ks_ci.low, report.ks_ci.high};
  j["ks_critical_99"] = report.ks_critical_99;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto key = "wasserstein_" + std::to_string(i + 1);
    j[key] = report.wasserstein[i];
    j[key + "_ci"] = {report.wasserstein_ci[i].low, report.wasserstein_ci[i].high};
  }
  j["trials"] = report.trials;
  j["theta"] = report.theta;
  return j.dump(2);
}

}  // namespace belyi
