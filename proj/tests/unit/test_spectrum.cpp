#include "belyi/spectrum.hpp"

#include <doctest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

using namespace belyi;

TEST_CASE("cube and K4 spectra") {
  const auto cube = adjacency_spectrum(load_model(std::string(BELYI_TEST_DATA_DIR) + "/cube_standard.model"));
  const std::vector<double> expected{3, 1, 1, 1, -1, -1, -1, -3};
  REQUIRE(cube.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(cube[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  const OrientedGraphModel k4(4, 3, Permutation::parse("(1,2,3)(4,5,6)(7,8,9)(10,11,12)", 12),
                              Permutation::parse("(1,4)(2,7)(3,10)(5,8)(6,11)(9,12)", 12));
  const auto s = adjacency_spectrum(k4);
  CHECK(s[0] == doctest::Approx(3.0));
  for (std::size_t i = 1; i < 4; ++i) CHECK(s[i] == doctest::Approx(-1.0));
}

TEST_CASE("top eigenvalue is k for connected samples") {
  Rng rng(1);
  int connected = 0;
  for (int i = 0; i < 200; ++i) {
    const auto model = sample_oriented_graph(128, 3, rng);
    if (model.component_count() != 1) continue;
    ++connected;
    CHECK(adjacency_spectrum(model)[0] == doctest::Approx(3.0).epsilon(1e-10));
  }
  CHECK(connected > 150);
}

TEST_CASE("Kesten-McKay density") {
  CHECK(kesten_mckay_density(3, 2.0 * std::sqrt(2.0)) == 0.0);
  CHECK(kesten_mckay_density(3, -2.0 * std::sqrt(2.0)) == 0.0);
  CHECK(kesten_mckay_density(3, 5.0) == 0.0);
  CHECK(kesten_mckay_density(3, 0.0) == doctest::Approx(std::sqrt(2.0) / (3.0 * M_PI)).epsilon(1e-14));
  boost::math::quadrature::tanh_sinh<double> integrator;
  for (int k : {3, 4, 5}) {
    const double edge = 2.0 * std::sqrt(k - 1.0);
    const double total = integrator.integrate([k](double t) { return kesten_mckay_density(k, t); }, -edge, edge);
    CHECK(std::abs(total - 1.0) <= 1e-8);
    double mass = 0.0;
    for (double m : kesten_mckay_bin_masses(k, 40)) mass += m;
    CHECK(std::abs(mass - 1.0) <= 1e-8);
  }
}

TEST_CASE("spectral histogram: parallel equals serial and fractions sum to one") {
  const auto a = spectral_histogram(60, 3, 8, 20, 5);
  const auto b = spectral_histogram_serial(60, 3, 8, 20, 5);
  CHECK(a.fractions == b.fractions);
  CHECK(a.l1_distance == b.l1_distance);
  double total = a.outside;
  for (double f : a.fractions) total += f;
  CHECK(total == doctest::Approx(1.0));
  CHECK(a.eigenvalue_count == 480);
}

TEST_CASE("second eigenvalues stay below k and mostly near the Ramanujan bound") {
  const auto sample = collect_second_eigenvalues(1024, 3, 20, 6);
  REQUIRE(sample.lambda2.size() == 20);
  int near = 0;
  for (double l2 : sample.lambda2) {
    CHECK(l2 < 3.0);
    near += l2 <= 2.0 * std::sqrt(2.0) + 0.1 ? 1 : 0;
  }
  CHECK(near >= 18);
}
