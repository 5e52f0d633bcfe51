#include "belyi/mixing.hpp"

#include "belyi/parallel.hpp"
#include "belyi/permutation.hpp"
#include "belyi/rng.hpp"
#include "belyi/symrep.hpp"

#include <gmp.h>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace belyi {

std::string to_string(Coset coset) { return coset == Coset::Even ? "even" : "odd"; }

Coset target_coset(int n, int part) {
  if (part < 1 || n % part != 0 || n % 2 != 0)
    throw std::invalid_argument("target_coset: need k | N and 2 | N");
  const long long beta_transpositions = static_cast<long long>(part - 1) * (n / part);
  const long long alpha_transpositions = n / 2;
  return (beta_transpositions + alpha_transpositions) % 2 == 0 ? Coset::Even : Coset::Odd;
}

Rational ClassDistribution::total() const {
  Rational sum = 0;
  for (const auto& p : probabilities) sum += p;
  return sum;
}

const Rational& ClassDistribution::at(const CycleType& type) const {
  const auto it = std::lower_bound(types.begin(), types.end(), type, std::greater<>());
  if (it == types.end() || *it != type) throw std::out_of_range("ClassDistribution: unknown type " + type.to_string());
  return probabilities[static_cast<std::size_t>(it - types.begin())];
}

ClassDistribution uniform_on_coset(int n, Coset coset) {
  if (n < 2) throw std::invalid_argument("uniform_on_coset: need N >= 2");
  ClassDistribution law;
  law.n = n;
  law.coset = coset;
  law.types = partitions(n);
  const BigInt half_order = factorial(static_cast<std::uint64_t>(n)) / 2;
  for (const auto& t : law.types) {
    const bool in_coset = t.is_even() == (coset == Coset::Even);
    law.probabilities.push_back(in_coset ? Rational(class_size(t), half_order) : Rational(0));
  }
  return law;
}

namespace {

void check_law_args(int n, int part) {
  if (n < 2 || n > 36 || part < 1 || n % part != 0 || n % 2 != 0)
    throw std::invalid_argument("exact_convolution_law: need 2 <= N <= 36, k | N, 2 | N");
}

ClassDistribution exact_law(int n, int part, bool parallel) {
  check_law_args(n, part);
  ClassDistribution law;
  law.n = n;
  law.coset = target_coset(n, part);
  law.types = partitions(n);
  const auto& labels = law.types;

  std::vector<BigInt> chi_k, chi_2, dims;
  if (parallel) {
    chi_k = rectangular_characters(n, part);
    chi_2 = rectangular_characters(n, 2);
    dims = dimensions(n);
  } else {
    chi_k = rectangular_characters_serial(n, part);
    chi_2 = rectangular_characters_serial(n, 2);
    for (const auto& lambda : labels) dims.push_back(dimension(lambda));
  }

  // Common multiple of the dimensions in play keeps every weight integral.
  BigInt scale = 1;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (chi_k[i] != 0 && chi_2[i] != 0)
      mpz_lcm(scale.backend().data(), scale.backend().data(), dims[i].backend().data());

  ShapeWeights weights;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (chi_k[i] != 0 && chi_2[i] != 0)
      weights.emplace_back(labels[i], chi_k[i] * chi_2[i] * (scale / dims[i]));

  const auto sums = parallel ? character_sums(n, weights) : character_sums_serial(n, weights);
  if (sums.size() != labels.size()) throw std::logic_error("exact_convolution_law: class count mismatch");

  const BigInt denominator = factorial(static_cast<std::uint64_t>(n)) * scale;
  law.probabilities.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Rational p(class_size(labels[i]) * sums[i], denominator);
    if (p < 0) throw std::logic_error("exact_convolution_law: negative probability at " + labels[i].to_string());
    law.probabilities.push_back(std::move(p));
  }
  if (law.total() != 1) throw std::logic_error("exact_convolution_law: probabilities do not sum to 1");
  return law;
}

}  // namespace

ClassDistribution exact_convolution_law(int n, int part) { return exact_law(n, part, true); }
ClassDistribution exact_convolution_law_serial(int n, int part) { return exact_law(n, part, false); }

Rational tv_distance(const ClassDistribution& p, const ClassDistribution& q) {
  if (p.n != q.n || p.types.size() != q.types.size())
    throw std::invalid_argument("tv_distance: distributions on different degrees");
  Rational total = 0;
  for (std::size_t i = 0; i < p.probabilities.size(); ++i) total += abs(p.probabilities[i] - q.probabilities[i]);
  return total / 2;
}

Rational tv_to_uniform(const ClassDistribution& law) {
  return tv_distance(law, uniform_on_coset(law.n, law.coset));
}

DsBound ds_upper_bound(int n, int part, bool reverse) {
  check_law_args(n, part);
  DsBound out;
  out.n = n;
  out.part = part;
  auto labels = partitions(n);
  auto chi_k = rectangular_characters(n, part);
  auto chi_2 = rectangular_characters(n, 2);
  if (reverse) {
    std::reverse(labels.begin(), labels.end());
    std::reverse(chi_k.begin(), chi_k.end());
    std::reverse(chi_2.begin(), chi_2.end());
  }
  const Partition trivial({n});
  const Partition alternating = Partition::rectangle(1, n);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == trivial || labels[i] == alternating) {
      out.excluded.push_back(labels[i]);
      continue;
    }
    if (chi_k[i] == 0 || chi_2[i] == 0) continue;
    const Rational ratio(chi_k[i] * chi_2[i], dimension(labels[i]));
    out.character_ratio_sum += ratio * ratio;
  }
  out.bound = boost::multiprecision::sqrt(to_high_prec(out.character_ratio_sum) / 2);
  return out;
}

namespace {

EmpiricalLaw mc_law(int n, int part, std::uint64_t trials, std::uint64_t seed, bool parallel) {
  if (n < 2 || n > 40 || part < 1 || n % part != 0 || n % 2 != 0 || trials < 1)
    throw std::invalid_argument("mc_convolution_law: need 2 <= N <= 40, k | N, 2 | N, trials >= 1");
  EmpiricalLaw law;
  law.n = n;
  law.trials = trials;
  law.types = partitions(n);
  std::unordered_map<Partition, std::uint32_t, PartitionHash> index;
  for (std::size_t i = 0; i < law.types.size(); ++i) index.emplace(law.types[i], static_cast<std::uint32_t>(i));

  auto trial = [&](std::uint64_t t) -> std::uint32_t {
    Rng rng = derive_stream(seed, t);
    const Permutation beta = sample_uniform_class(static_cast<std::size_t>(n), static_cast<std::size_t>(part), rng);
    const Permutation alpha = sample_uniform_class(static_cast<std::size_t>(n), 2, rng);
    return index.at(cycle_type(compose(beta, alpha)));
  };
  const auto outcomes = parallel ? map_trials<std::uint32_t>(trials, trial)
                                 : map_trials_serial<std::uint32_t>(trials, trial);
  law.counts.assign(law.types.size(), 0);
  for (auto o : outcomes) ++law.counts[o];
  return law;
}

}  // namespace

EmpiricalLaw mc_convolution_law(int n, int part, std::uint64_t trials, std::uint64_t seed) {
  return mc_law(n, part, trials, seed, true);
}
EmpiricalLaw mc_convolution_law_serial(int n, int part, std::uint64_t trials, std::uint64_t seed) {
  return mc_law(n, part, trials, seed, false);
}

ClassDistribution EmpiricalLaw::as_distribution(Coset coset) const {
  ClassDistribution law;
  law.n = n;
  law.coset = coset;
  law.types = types;
  for (auto c : counts) law.probabilities.emplace_back(BigInt(c), BigInt(trials));
  return law;
}

void write_law_csv(std::ostream& out, const ClassDistribution& law) {
  out << "mu,probability_numerator,probability_denominator\n";
  for (std::size_t i = 0; i < law.types.size(); ++i) {
    const auto& p = law.probabilities[i];
    if (p == 0) continue;
    out << law.types[i].to_string() << ',' << boost::multiprecision::numerator(p) << ','
        << boost::multiprecision::denominator(p) << '\n';
  }
}

MixingReport mixing_report(int n, int part) {
  MixingReport r;
  r.n = n;
  r.part = part;
  const auto law = exact_convolution_law(n, part);
  r.coset = law.coset;
  r.tv_exact = tv_to_uniform(law);
  r.ds_bound = ds_upper_bound(n, part).bound;
  return r;
}

std::string to_json(const MixingReport& report) {
  std::ostringstream tv;
  tv << report.tv_exact;
  nlohmann::ordered_json j;
  j["N"] = report.n;
  j["k"] = report.part;
  j["tv_exact"] = static_cast<double>(to_high_prec(report.tv_exact));
  j["tv_exact_fraction"] = tv.str();
  j["ds_bound"] = static_cast<double>(report.ds_bound);
  j["coset"] = to_string(report.coset);
  return j.dump(2);
}

}  // namespace belyi
