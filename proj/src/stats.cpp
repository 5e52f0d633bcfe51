#include "belyi/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace belyi::stats {

Moments moments(std::span<const double> values) {
  Moments m;
  m.count = values.size();
  if (values.empty()) return m;
  double sum = 0.0;
  for (double v : values) sum += v;
  m.mean = sum / static_cast<double>(m.count);
  double m2 = 0.0;
  double m4 = 0.0;
  for (double v : values) {
    const double d = v - m.mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  const double n = static_cast<double>(m.count);
  if (m.count > 1) {
    m.variance = m2 / (n - 1.0);
    m.se_mean = std::sqrt(m.variance / n);
    const double mu2 = m2 / n;
    const double mu4 = m4 / n;
    m.se_variance = std::sqrt(std::max(0.0, (mu4 - mu2 * mu2 * (n - 3.0) / (n - 1.0)) / n));
  }
  return m;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double ks_one_sample(std::vector<double> values, const std::function<double(double)>& cdf) {
  if (values.empty()) throw std::invalid_argument("ks_one_sample: empty sample");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = cdf(values[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_lattice_midpoint(std::vector<int> values, const std::function<double(double)>& transform,
                           const std::function<double(double)>& cdf) {
  if (values.empty()) throw std::invalid_argument("ks_lattice_midpoint: empty sample");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  std::size_t i = 0;
  // Below the smallest value the empirical CDF is 0.
  d = std::max(d, cdf(transform(values.front() - 0.5)));
  while (i < values.size()) {
    const int v = values[i];
    while (i < values.size() && values[i] == v) ++i;
    const double empirical = static_cast<double>(i) / n;
    d = std::max(d, std::abs(empirical - cdf(transform(v + 0.5))));
  }
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double kolmogorov_sf(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 0.2) return 1.0;
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * x * x);
    sum += (j % 2 ? 1.0 : -1.0) * term;
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double kolmogorov_critical(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("kolmogorov_critical: alpha in (0,1)");
  double lo = 0.2, hi = 5.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (kolmogorov_sf(mid) > alpha) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double ks_two_sample_critical(double alpha, std::uint64_t n, std::uint64_t m) {
  const double nn = static_cast<double>(n);
  const double mm = static_cast<double>(m);
  return kolmogorov_critical(alpha) * std::sqrt((nn + mm) / (nn * mm));
}

double wasserstein1(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("wasserstein1: samples must be nonempty and of equal size");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::abs(a[i] - b[i]);
  return total / static_cast<double>(a.size());
}

double chi_square_statistic(std::span<const std::uint64_t> observed, std::span<const double> expected) {
  if (observed.size() != expected.size()) throw std::invalid_argument("chi_square_statistic: size mismatch");
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double diff = static_cast<double>(observed[i]) - expected[i];
    stat += diff * diff / expected[i];
  }
  return stat;
}

double chi_square_quantile(double degrees_of_freedom, double p) {
  return boost::math::quantile(boost::math::chi_squared(degrees_of_freedom), p);
}

}  // namespace belyi::stats
