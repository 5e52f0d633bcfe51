#pragma once

#include "belyi/bigint.hpp"
#include "belyi/partition.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace belyi {

enum class Coset { Even, Odd };

std::string to_string(Coset coset);

/// Parity coset containing beta*alpha when beta has type k^{N/k} and alpha
/// type 2^{N/2}: sign = (-1)^{(k-1)N/k} * (-1)^{N/2}.
Coset target_coset(int n, int part);

/// Exact law over cycle types of N. `types` is partitions(N) (reverse
/// lexicographic) and `probabilities` is aligned with it; types outside the
/// coset carry probability 0.
struct ClassDistribution {
  int n = 0;
  Coset coset = Coset::Even;
  std::vector<CycleType> types;
  std::vector<Rational> probabilities;

  Rational total() const;
  const Rational& at(const CycleType& type) const;
};

/// Uniform measure on the coset: 2 |C(mu)| / N! on types of matching parity.
ClassDistribution uniform_on_coset(int n, Coset coset);

/// Law of cycle_type(beta * alpha) with beta uniform on k^{N/k} and alpha
/// uniform on 2^{N/2}, by the Frobenius class-multiplication formula
///   P(mu) = |C(mu)| / N! * sum_lambda chi(C_k) chi(C_2) chi(mu) / f^lambda,
/// evaluated in exact rationals (N <= 36, k | N, 2 | N). Throws
/// std::logic_error on a negative probability or a total different from 1.
ClassDistribution exact_convolution_law(int n, int part);
ClassDistribution exact_convolution_law_serial(int n, int part);

/// (1/2) sum |P(mu) - Q(mu)|. Distributions must share n.
Rational tv_distance(const ClassDistribution& p, const ClassDistribution& q);
/// Distance to uniform on the law's coset.
Rational tv_to_uniform(const ClassDistribution& law);

/// Upper bound from the Fourier side:
///   bound^2 = (1/2) sum_{lambda != (N), (1^N)} (chi(C_k) chi(C_2) / f^lambda)^2.
struct DsBound {
  int n = 0;
  int part = 0;
  /// The sum without the 1/2, exact.
  Rational character_ratio_sum;
  HighPrec bound;
  /// Shapes skipped: always (N) and (1^N).
  std::vector<Partition> excluded;
};
/// `reverse` walks the partitions in the opposite order; the exact sum must
/// not change.
DsBound ds_upper_bound(int n, int part, bool reverse = false);

/// Empirical law from `trials` independent pairs; trial i draws beta then
/// alpha from derive_stream(seed, i).
struct EmpiricalLaw {
  int n = 0;
  std::uint64_t trials = 0;
  std::vector<CycleType> types;        // partitions(N)
  std::vector<std::uint64_t> counts;   // aligned with types

  ClassDistribution as_distribution(Coset coset) const;
};
EmpiricalLaw mc_convolution_law(int n, int part, std::uint64_t trials, std::uint64_t seed);
EmpiricalLaw mc_convolution_law_serial(int n, int part, std::uint64_t trials, std::uint64_t seed);

/// CSV "mu,probability_numerator,probability_denominator", one row per type
/// with nonzero probability.
void write_law_csv(std::ostream& out, const ClassDistribution& law);

struct MixingReport {
  int n = 0;
  int part = 0;
  Rational tv_exact;
  HighPrec ds_bound;
  Coset coset = Coset::Even;
};
MixingReport mixing_report(int n, int part);
/// {"N":..,"k":..,"tv_exact":..,"ds_bound":..,"coset":"even"}; reals with 17
/// significant digits, plus the exact tv as a fraction string.
std::string to_json(const MixingReport& report);

}  // namespace belyi
