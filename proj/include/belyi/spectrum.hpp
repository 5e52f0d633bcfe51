#pragma once

#include "belyi/rng.hpp"
#include "belyi/surface.hpp"

#include <cstdint>
#include <vector>

namespace belyi {

/// Eigenvalues of the multigraph adjacency matrix, nonincreasing. A loop adds
/// 2 to its diagonal entry so every row sums to k. Dense symmetric solver.
std::vector<double> adjacency_spectrum(const OrientedGraphModel& model);

/// Kesten-McKay density (k / 2pi) sqrt(4(k-1) - t^2) / (k^2 - t^2) on
/// |t| <= 2 sqrt(k-1); zero outside the support.
double kesten_mckay_density(int regularity, double t);

/// Probability mass of the Kesten-McKay law in each of `bins` equal bins
/// covering [-2 sqrt(k-1), 2 sqrt(k-1)].
std::vector<double> kesten_mckay_bin_masses(int regularity, int bins);

struct SpectralHistogram {
  int regularity = 0;
  double lower = 0.0;
  double upper = 0.0;
  /// Fraction of all eigenvalues falling in each bin.
  std::vector<double> fractions;
  /// Fraction of eigenvalues outside [lower, upper].
  double outside = 0.0;
  std::uint64_t eigenvalue_count = 0;
  /// sum over bins |fraction - Kesten-McKay mass| + outside.
  double l1_distance = 0.0;
};

/// Pools the spectra of `graphs` independent models (graph g uses
/// derive_stream(seed, g)) into a histogram on the Kesten-McKay support.
SpectralHistogram spectral_histogram(int vertices, int regularity, int graphs, int bins,
                                     std::uint64_t seed);
SpectralHistogram spectral_histogram_serial(int vertices, int regularity, int graphs, int bins,
                                            std::uint64_t seed);

struct SecondEigenvalueSample {
  std::vector<double> lambda2;
  /// Disconnected draws are redrawn from the same stream and counted here.
  std::uint64_t disconnected_redraws = 0;
};

/// Second largest adjacency eigenvalue of `samples` connected models.
SecondEigenvalueSample collect_second_eigenvalues(int vertices, int regularity, int samples,
                                                  std::uint64_t seed);

}  // namespace belyi
