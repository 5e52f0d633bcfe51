#include "oracles.hpp"

#include "belyi/mixing.hpp"
#include "belyi/permutation.hpp"
#include "belyi/symrep.hpp"

#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <sstream>

using namespace belyi;

namespace {

void check_against_enumeration(int n, int k) {
  const auto law = exact_convolution_law(n, k);
  const auto brute = oracle::brute_force_product_law(n, k);
  for (std::size_t i = 0; i < law.types.size(); ++i) {
    const auto it = brute.find(law.types[i].parts());
    REQUIRE(law.probabilities[i] == (it == brute.end() ? Rational(0) : it->second));
  }
}

}  // namespace

TEST_CASE("coset of the product") {
  CHECK(target_coset(12, 3) == Coset::Even);
  CHECK(target_coset(6, 3) == Coset::Odd);
  CHECK(target_coset(8, 4) == Coset::Even);
  CHECK(target_coset(18, 3) == Coset::Odd);
  const auto mc = mc_convolution_law(8, 4, 20000, 3);
  for (std::size_t i = 0; i < mc.types.size(); ++i)
    if (mc.counts[i] > 0) CHECK(mc.types[i].is_even());
}

TEST_CASE("exact law equals full enumeration") {
  check_against_enumeration(6, 3);
  check_against_enumeration(6, 2);
  check_against_enumeration(8, 4);
  check_against_enumeration(8, 2);
  check_against_enumeration(4, 2);
}

TEST_CASE("exact law normalization and support") {
  for (int n : {6, 12}) {
    const auto law = exact_convolution_law(n, 3);
    CHECK(law.total() == 1);
    for (std::size_t i = 0; i < law.types.size(); ++i)
      if (law.probabilities[i] != 0) REQUIRE(law.types[i].is_even() == (law.coset == Coset::Even));
  }
  CHECK(exact_convolution_law(6, 3).coset == Coset::Odd);
  CHECK(exact_convolution_law(12, 3).coset == Coset::Even);
  CHECK(exact_convolution_law(12, 3).at(Partition({3, 3, 3, 3})) > 0);
  CHECK_THROWS_AS(exact_convolution_law(9, 3), std::invalid_argument);
  CHECK_THROWS_AS(exact_convolution_law(38, 2), std::invalid_argument);
}

TEST_CASE("parallel law equals the serial reference") {
  for (int n : {12, 18}) {
    const auto a = exact_convolution_law(n, 3);
    const auto b = exact_convolution_law_serial(n, 3);
    CHECK(a.probabilities == b.probabilities);
  }
}

TEST_CASE("total variation") {
  const auto u = uniform_on_coset(12, Coset::Even);
  CHECK(u.total() == 1);
  CHECK(tv_to_uniform(u) == 0);
  auto point = u;
  for (auto& p : point.probabilities) p = 0;
  const Partition type({3, 3, 3, 3});
  const auto idx = static_cast<std::size_t>(std::find(point.types.begin(), point.types.end(), type) - point.types.begin());
  point.probabilities[idx] = 1;
  CHECK(tv_distance(point, u) == 1 - Rational(2 * class_size(type), factorial(12)));
  for (int n : {6, 12, 18}) {
    const auto tv = tv_to_uniform(exact_convolution_law(n, 3));
    CHECK(tv >= 0);
    CHECK(tv <= 1);
  }
}

TEST_CASE("Fourier bound") {
  const auto forward = ds_upper_bound(12, 3);
  const auto reverse = ds_upper_bound(12, 3, true);
  CHECK(forward.character_ratio_sum == reverse.character_ratio_sum);
  REQUIRE(forward.excluded.size() == 2);
  CHECK(std::find(forward.excluded.begin(), forward.excluded.end(), Partition({12})) != forward.excluded.end());
  CHECK(std::find(forward.excluded.begin(), forward.excluded.end(), Partition::rectangle(1, 12)) != forward.excluded.end());
  // Both excluded shapes have ratio magnitude 1.
  for (const auto& lambda : forward.excluded) {
    const auto r = Rational(mn_character(lambda, Partition({3, 3, 3, 3})) *
                                mn_character(lambda, Partition({2, 2, 2, 2, 2, 2})),
                            dimension(lambda));
    CHECK(abs(r) == 1);
  }
  // The (N-1,1) term is (1 * 1 / (N-1))^2.
  const Partition hook({11, 1});
  const auto term = Rational(mn_character(hook, Partition({3, 3, 3, 3})) *
                                 mn_character(hook, Partition({2, 2, 2, 2, 2, 2})),
                             dimension(hook));
  CHECK(term * term == Rational(1, 121));
  CHECK(to_high_prec(tv_to_uniform(exact_convolution_law(12, 3))) <= forward.bound);
}

TEST_CASE("Monte Carlo law") {
  const auto six = mc_convolution_law(6, 3, 20000, 4);
  for (std::size_t i = 0; i < six.types.size(); ++i)
    if (six.counts[i] > 0) CHECK_FALSE(six.types[i].is_even());

  const auto exact = exact_convolution_law(12, 3);
  const std::uint64_t trials = 200000;
  const auto mc = mc_convolution_law(12, 3, trials, 5);
  for (std::size_t i = 0; i < exact.types.size(); ++i) {
    const double p = static_cast<double>(to_high_prec(exact.probabilities[i]));
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    const double freq = static_cast<double>(mc.counts[i]) / static_cast<double>(trials);
    if (p == 0.0) REQUIRE(mc.counts[i] == 0);
    else REQUIRE(std::abs(freq - p) <= 4.0 * se + 1e-12);
  }
  const auto serial = mc_convolution_law_serial(12, 3, 5000, 6);
  CHECK(mc_convolution_law(12, 3, 5000, 6).counts == serial.counts);
}

TEST_CASE("law CSV and report JSON") {
  std::ostringstream out;
  write_law_csv(out, exact_convolution_law(6, 3));
  const auto s = out.str();
  CHECK(s.rfind("mu,probability_numerator,probability_denominator\n", 0) == 0);
  CHECK(s.find("\n6,") != std::string::npos);
  const auto report = mixing_report(12, 3);
  const auto j = nlohmann::json::parse(to_json(report));
  CHECK(j["N"] == 12);
  CHECK(j["k"] == 3);
  CHECK(j["coset"] == "even");
  CHECK(j["tv_exact"].get<double>() <= j["ds_bound"].get<double>());
}
