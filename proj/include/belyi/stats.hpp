#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace belyi::stats {

struct Moments {
  std::uint64_t count = 0;
  double mean = 0.0;
  /// Unbiased sample variance.
  double variance = 0.0;
  double se_mean = 0.0;
  /// Standard error of the sample variance, from the fourth central moment.
  double se_variance = 0.0;
};

/// Two-pass moments; summation runs in the order given.
Moments moments(std::span<const double> values);

double normal_cdf(double x);

/// One-sample Kolmogorov-Smirnov statistic sup |F_n - F|. Takes a copy and sorts it.
double ks_one_sample(std::vector<double> values, const std::function<double(double)>& cdf);

/// Same, for integer-valued data evaluated at lattice midpoints: the
/// empirical CDF at k + 1/2 is compared with F(k + 1/2) for every occupied k.
/// `transform` maps a lattice value to the scale on which `cdf` is defined.
double ks_lattice_midpoint(std::vector<int> values, const std::function<double(double)>& transform,
                           const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Asymptotic Kolmogorov survival function P(K > x) = 2 sum (-1)^{j-1} exp(-2 j^2 x^2).
double kolmogorov_sf(double x);
/// x with kolmogorov_sf(x) = alpha.
double kolmogorov_critical(double alpha);
/// Critical two-sample KS distance at level alpha for sample sizes n, m.
double ks_two_sample_critical(double alpha, std::uint64_t n, std::uint64_t m);

/// W1 distance between two empirical distributions of equal size.
double wasserstein1(std::vector<double> a, std::vector<double> b);

/// Pearson statistic sum (O - E)^2 / E.
double chi_square_statistic(std::span<const std::uint64_t> observed, std::span<const double> expected);
double chi_square_quantile(double degrees_of_freedom, double p);

}  // namespace belyi::stats
