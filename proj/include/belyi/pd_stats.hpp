#pragma once

#include "belyi/rng.hpp"
#include "belyi/stats.hpp"
#include "belyi/surface.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace belyi {

inline constexpr double kEulerGamma = 0.5772156649;
inline constexpr double kZeta2 = 1.6449340668;

/// Masses in nonincreasing order; residual is the unassigned stick.
struct RankedMassVector {
  std::vector<double> masses;
  double residual = 0.0;
};

/// First `trunc` stick-breaking masses G_i = (1-B_1)...(1-B_{i-1}) B_i with
/// B_i ~ Beta(1, theta) drawn as 1 - U^{1/theta} (U itself when theta = 1).
/// The unranked variant keeps the breaking order.
RankedMassVector gem_sample_unranked(double theta, int trunc, Rng& rng);
RankedMassVector gem_sample(double theta, int trunc, Rng& rng);

/// Face lengths divided by k*n; residual 0.
RankedMassVector normalized_spectrum(const FaceSpectrum& spectrum);

/// Integral over [0, inf) of exp(-x - E1(x)), adaptive Gauss-Kronrod on
/// [0, 40] plus the e^{-40} tail bound. Throws std::runtime_error when the
/// error estimate exceeds 1e-8.
double golomb_dickman_constant();

struct FaceRecord {
  int faces = 0;     // l
  int largest = 0;   // L
  int genus = 0;
  int components = 1;
  /// Three largest face lengths, 0 when absent.
  std::array<int, 3> top{};
};

struct FaceCountSample {
  int vertices = 0;
  int regularity = 0;
  std::uint64_t seed = 0;
  std::vector<FaceRecord> records;  // by trial index
};

/// Trial i samples an oriented graph from derive_stream(seed, i).
FaceCountSample sample_faces(int vertices, int regularity, std::uint64_t trials, std::uint64_t seed);
FaceCountSample sample_faces_serial(int vertices, int regularity, std::uint64_t trials, std::uint64_t seed);

/// Full spectra, same streams as sample_faces.
std::vector<FaceSpectrum> sample_face_spectra(int vertices, int regularity, std::uint64_t trials,
                                              std::uint64_t seed);
/// CSV "seed,n,k,l,L,genus,face_lengths"; seed is the trial's stream seed and
/// face_lengths is ';'-joined, largest first.
void write_face_spectra_csv(std::ostream& out, const std::vector<FaceSpectrum>& spectra, std::uint64_t seed);

/// CSV "trial,seed,n,k,l,L,genus".
void write_face_sample_csv(std::ostream& out, const FaceCountSample& sample);

struct FaceCountStats {
  std::uint64_t trials = 0;
  stats::Moments faces;
  /// log(kn) + gamma and log(kn) + gamma - pi^2/6.
  double predicted_mean = 0.0;
  double predicted_variance = 0.0;
};
FaceCountStats face_count_stats(const FaceCountSample& sample);

double harmonic_number(std::uint64_t n);

/// Cycle lengths of a uniform permutation of `degree` points, by the
/// sequential rule: the cycle through the smallest remaining point has length
/// uniform on {1, ..., remaining}.
std::vector<int> sample_uniform_cycle_lengths(int degree, Rng& rng);

/// Cycle count of uniform permutations, with the exact mean H_N alongside.
struct CycleCountStats {
  stats::Moments cycles;
  double harmonic = 0.0;
};
CycleCountStats uniform_cycle_count_stats(int degree, std::uint64_t trials, std::uint64_t seed);

struct CltReport {
  std::uint64_t trials = 0;
  double center = 0.0;   // log(kn)
  double scale = 0.0;    // sqrt(log(kn))
  /// KS of (l - center)/scale against N(0,1) on the raw step function, and
  /// with the empirical CDF read at lattice midpoints.
  double ks_raw = 0.0;
  double ks_midpoint = 0.0;
  stats::Moments standardized;
  stats::Moments genus;
  /// 1 + n/4 - (log kn + gamma)/2.
  double predicted_genus_mean = 0.0;
  /// The limit law 1 + n/4 - N(log n, sqrt(log n))/2: mean and SD.
  double implied_genus_mean = 0.0;
  double implied_genus_sd = 0.0;
  bool genus_nonnegative = true;
  /// Records whose genus differs from (components - 1) + 1 + (n - 2l)/4 (k = 3).
  std::uint64_t genus_mismatches = 0;
};
/// Requires at least 10^4 records.
CltReport clt_check(const FaceCountSample& sample);

struct RatioEstimate {
  std::uint64_t trials = 0;
  double mean = 0.0;
  double se = 0.0;
};
/// Mean of L/(kn). Requires at least 10^3 records.
RatioEstimate largest_face_ratio(const FaceCountSample& sample);
/// Mean largest cycle fraction of uniform permutations of `degree` points.
RatioEstimate largest_cycle_ratio(int degree, std::uint64_t trials, std::uint64_t seed);

using RankedTop = std::array<double, 3>;

/// Three largest normalized face lengths per record.
std::vector<RankedTop> ranked_tops(const FaceCountSample& sample);
/// Three largest masses of gem_sample(theta, trunc) for trials 0..count-1,
/// trial i on derive_stream(seed, i). Masses below 1e-9 read as 0.
std::vector<RankedTop> pd_tops(double theta, std::uint64_t count, std::uint64_t seed, int trunc = 200);
std::vector<RankedTop> pd_tops_serial(double theta, std::uint64_t count, std::uint64_t seed, int trunc = 200);

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

struct PdDistanceReport {
  std::uint64_t trials = 0;
  double theta = 1.0;
  /// Two-sample KS on the largest coordinate.
  double ks = 0.0;
  Interval ks_ci;
  /// 99% two-sample KS critical value for the sample sizes.
  double ks_critical_99 = 0.0;
  /// W1 between the j-th ranked coordinates, j = 1, 2, 3.
  std::array<double, 3> wasserstein{};
  std::array<Interval, 3> wasserstein_ci{};
};

/// Compares `spectra` with as many PD(theta) draws (seeded by pd_seed), with
/// percentile bootstrap intervals (95%) from `bootstrap` resamples.
/// Requires at least 10^4 spectra.
PdDistanceReport pd_distance(const std::vector<RankedTop>& spectra, double theta, std::uint64_t pd_seed,
                             int bootstrap = 200);
/// Same, against a given reference sample of equal size.
PdDistanceReport pd_distance(const std::vector<RankedTop>& spectra, const std::vector<RankedTop>& reference,
                             double theta, std::uint64_t bootstrap_seed, int bootstrap = 200);

/// {"ks":..,"wasserstein_1":..,"wasserstein_2":..,"wasserstein_3":..,"trials":..,"theta":..}
std::string to_json(const PdDistanceReport& report);

}  // namespace belyi
