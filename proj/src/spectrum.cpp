#include "belyi/spectrum.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace belyi {

std::vector<double> adjacency_spectrum(const OrientedGraphModel& model) {
  const int n = model.vertices();
  if (n > 4096) throw std::invalid_argument("adjacency_spectrum: n must be <= 4096");
  Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : model.edges()) {
    adjacency(u, v) += 1.0;
    adjacency(v, u) += 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("adjacency_spectrum: eigensolve failed");
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

double kesten_mckay_density(int regularity, double t) {
  const double k = regularity;
  const double radicand = 4.0 * (k - 1.0) - t * t;
  if (radicand <= 0.0) return 0.0;
  return k / (2.0 * std::numbers::pi) * std::sqrt(radicand) / (k * k - t * t);
}

std::vector<double> kesten_mckay_bin_masses(int regularity, int bins) {
  if (regularity < 2 || bins < 1) throw std::invalid_argument("kesten_mckay_bin_masses: bad arguments");
  const double edge = 2.0 * std::sqrt(regularity - 1.0);
  const double width = 2.0 * edge / bins;
  std::vector<double> masses(static_cast<std::size_t>(bins));
  auto density = [regularity](double t) { return kesten_mckay_density(regularity, t); };
  for (int b = 0; b < bins; ++b) {
    const double lo = -edge + b * width;
    const double hi = (b + 1 == bins) ? edge : lo + width;
    masses[static_cast<std::size_t>(b)] =
        boost::math::quadrature::gauss_kronrod<double, 31>::integrate(density, lo, hi, 20, 1e-13);
  }
  return masses;
}

namespace {

struct GraphCounts {
  std::vector<std::uint64_t> bins;
  std::uint64_t outside = 0;
};

GraphCounts histogram_one(int vertices, int regularity, int bins, std::uint64_t seed,
                          std::uint64_t index) {
  Rng rng = derive_stream(seed, index);
  const auto model = sample_oriented_graph(vertices, regularity, rng);
  const auto values = adjacency_spectrum(model);
  const double edge = 2.0 * std::sqrt(regularity - 1.0);
  GraphCounts counts{std::vector<std::uint64_t>(static_cast<std::size_t>(bins), 0), 0};
  for (double x : values) {
    if (x < -edge || x > edge) {
      ++counts.outside;
      continue;
    }
    auto b = static_cast<int>((x + edge) / (2.0 * edge) * bins);
    b = std::clamp(b, 0, bins - 1);
    ++counts.bins[static_cast<std::size_t>(b)];
  }
  return counts;
}

SpectralHistogram finish(int vertices, int regularity, int bins, const std::vector<GraphCounts>& per_graph) {
  SpectralHistogram h;
  h.regularity = regularity;
  h.upper = 2.0 * std::sqrt(regularity - 1.0);
  h.lower = -h.upper;
  std::vector<std::uint64_t> totals(static_cast<std::size_t>(bins), 0);
  std::uint64_t outside = 0;
  for (const auto& g : per_graph) {
    for (std::size_t b = 0; b < totals.size(); ++b) totals[b] += g.bins[b];
    outside += g.outside;
  }
  h.eigenvalue_count = static_cast<std::uint64_t>(vertices) * per_graph.size();
  const double total = static_cast<double>(h.eigenvalue_count);
  const auto masses = kesten_mckay_bin_masses(regularity, bins);
  h.fractions.resize(totals.size());
  h.outside = static_cast<double>(outside) / total;
  h.l1_distance = h.outside;
  for (std::size_t b = 0; b < totals.size(); ++b) {
    h.fractions[b] = static_cast<double>(totals[b]) / total;
    h.l1_distance += std::abs(h.fractions[b] - masses[b]);
  }
  return h;
}

void check_histogram_args(int graphs, int bins) {
  if (graphs < 1 || bins < 1) throw std::invalid_argument("spectral_histogram: graphs and bins must be positive");
}

}  // namespace

SpectralHistogram spectral_histogram_serial(int vertices, int regularity, int graphs, int bins,
                                            std::uint64_t seed) {
  check_histogram_args(graphs, bins);
  std::vector<GraphCounts> per_graph;
  for (int g = 0; g < graphs; ++g)
    per_graph.push_back(histogram_one(vertices, regularity, bins, seed, static_cast<std::uint64_t>(g)));
  return finish(vertices, regularity, bins, per_graph);
}

SpectralHistogram spectral_histogram(int vertices, int regularity, int graphs, int bins,
                                     std::uint64_t seed) {
  check_histogram_args(graphs, bins);
  std::vector<GraphCounts> per_graph(static_cast<std::size_t>(graphs));
#pragma omp parallel for schedule(dynamic, 1)
  for (int g = 0; g < graphs; ++g)
    per_graph[static_cast<std::size_t>(g)] =
        histogram_one(vertices, regularity, bins, seed, static_cast<std::uint64_t>(g));
  return finish(vertices, regularity, bins, per_graph);
}

SecondEigenvalueSample collect_second_eigenvalues(int vertices, int regularity, int samples,
                                                  std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("collect_second_eigenvalues: samples must be positive");
  SecondEigenvalueSample out;
  out.lambda2.resize(static_cast<std::size_t>(samples));
  std::vector<std::uint64_t> redraws(static_cast<std::size_t>(samples), 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (int s = 0; s < samples; ++s) {
    Rng rng = derive_stream(seed, static_cast<std::uint64_t>(s));
    auto model = sample_oriented_graph(vertices, regularity, rng);
    while (model.component_count() != 1) {
      ++redraws[static_cast<std::size_t>(s)];
      model = sample_oriented_graph(vertices, regularity, rng);
    }
    out.lambda2[static_cast<std::size_t>(s)] = adjacency_spectrum(model).at(1);
  }
  for (auto r : redraws) out.disconnected_redraws += r;
  return out;
}

}  // namespace belyi
