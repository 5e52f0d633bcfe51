#include "belyi/parallel.hpp"
#include "belyi/pd_stats.hpp"
#include "belyi/permutation.hpp"

#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <sstream>

using namespace belyi;

TEST_CASE("stick-breaking masses") {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const auto g = gem_sample(1.0, 50, rng);
    double total = g.residual;
    for (double m : g.masses) {
      REQUIRE(m > 0.0);
      REQUIRE(m <= 1.0);
      total += m;
    }
    REQUIRE(std::abs(total - 1.0) <= 1e-12);
    REQUIRE(std::is_sorted(g.masses.rbegin(), g.masses.rend()));
  }
  for (std::uint64_t i = 0; i < 100; ++i) {
    double previous = 1.0;
    for (int trunc : {1, 2, 5, 20, 100}) {
      Rng r = derive_stream(2, i);
      const double residual = gem_sample_unranked(2.5, trunc, r).residual;
      REQUIRE(residual <= previous);
      previous = residual;
    }
  }
  CHECK_THROWS_AS(gem_sample(0.0, 10, rng), std::invalid_argument);
  CHECK_THROWS_AS(gem_sample(1.0, 0, rng), std::invalid_argument);
}

TEST_CASE("first stick and largest mass for theta = 1") {
  std::vector<double> first, largest;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    Rng rng = derive_stream(3, i);
    const auto g = gem_sample_unranked(1.0, 200, rng);
    first.push_back(g.masses[0]);
    largest.push_back(*std::max_element(g.masses.begin(), g.masses.end()));
  }
  const auto m1 = stats::moments(first);
  CHECK(std::abs(m1.mean - 0.5) <= 0.005);
  CHECK(stats::ks_one_sample(first, [](double x) { return std::clamp(x, 0.0, 1.0); }) <= 0.01);
  CHECK(std::abs(stats::moments(largest).mean - 0.6243) <= 0.005);
}

TEST_CASE("theta changes the first stick") {
  std::vector<double> first;
  for (std::uint64_t i = 0; i < 20000; ++i) {
    Rng rng = derive_stream(4, i);
    first.push_back(gem_sample_unranked(4.0, 1, rng).masses[0]);
  }
  // Beta(1, 4) has mean 1/5.
  CHECK(std::abs(stats::moments(first).mean - 0.2) <= 0.005);
}

TEST_CASE("Golomb-Dickman constant") {
  const double gd = golomb_dickman_constant();
  CHECK(gd >= 0.6242);
  CHECK(gd <= 0.6244);
  CHECK(gd == doctest::Approx(0.6243299885435508).epsilon(1e-9));
  CHECK(std::exp(-40.0) < 1e-15);
  // Mean largest cycle fraction of uniform permutations of 10^6 points.
  const auto mc = largest_cycle_ratio(1'000'000, 10000, 5);
  MESSAGE("largest cycle fraction " << mc.mean << " +/- " << mc.se);
  CHECK(std::abs(mc.mean - gd) <= 4.0 * mc.se);
}

TEST_CASE("sequential cycle sampler matches explicit uniform permutations") {
  std::vector<double> a, b;
  for (std::uint64_t i = 0; i < 5000; ++i) {
    Rng r1 = derive_stream(6, i);
    a.push_back(static_cast<double>(sample_uniform_cycle_lengths(60, r1).size()));
    Rng r2 = derive_stream(7, i);
    b.push_back(static_cast<double>(sample_uniform_permutation(60, r2).cycle_count()));
  }
  CHECK(stats::ks_two_sample(a, b) < stats::ks_two_sample_critical(0.001, 5000, 5000));
}

TEST_CASE("uniform permutation baseline: mean cycle count is the harmonic number") {
  const auto s = uniform_cycle_count_stats(6144, 20000, 8);
  MESSAGE("mean cycles " << s.cycles.mean << " vs H = " << s.harmonic);
  CHECK(std::abs(s.cycles.mean - s.harmonic) <= 3.0 * s.cycles.se_mean);
  CHECK(harmonic_number(1) == 1.0);
  CHECK(harmonic_number(4) == doctest::Approx(25.0 / 12.0));
}

TEST_CASE("face samples: invariants, serial reference, CSV") {
  const auto sample = sample_faces(200, 3, 3000, 9);
  const auto serial = sample_faces_serial(200, 3, 3000, 9);
  REQUIRE(sample.records.size() == 3000);
  for (std::size_t i = 0; i < sample.records.size(); ++i) {
    const auto& r = sample.records[i];
    REQUIRE(r.faces == serial.records[i].faces);
    REQUIRE(r.largest == serial.records[i].largest);
    REQUIRE(r.faces >= 1);
    REQUIRE(r.largest >= 1);
    REQUIRE(r.largest <= 600);
    REQUIRE(r.genus >= 0);
    REQUIRE(4 * r.genus == 4 * (r.components - 1) + 4 + 200 - 2 * r.faces);
  }
  std::ostringstream out;
  write_face_sample_csv(out, sample);
  CHECK(out.str().rfind("trial,seed,n,k,l,L,genus\n0,", 0) == 0);

  const auto spectra = sample_face_spectra(200, 3, 50, 9);
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    const auto ranked = normalized_spectrum(spectra[i]);
    double total = 0.0;
    for (double m : ranked.masses) total += m;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spectra[i].face_count == sample.records[i].faces);
  }
  std::ostringstream spectra_csv;
  write_face_spectra_csv(spectra_csv, spectra, 9);
  CHECK(spectra_csv.str().rfind("seed,n,k,l,L,genus,face_lengths\n", 0) == 0);
}

TEST_CASE("face count moments at n=4096 and the central limit check") {
  const auto sample = sample_faces(4096, 3, 50000, 10);
  const auto fc = face_count_stats(sample);
  const auto clt = clt_check(sample);
  MESSAGE("mean " << fc.faces.mean << " (" << fc.predicted_mean << "), var " << fc.faces.variance << " ("
                  << fc.predicted_variance << ")");
  MESSAGE("KS raw " << clt.ks_raw << ", KS at lattice midpoints " << clt.ks_midpoint);
  CHECK(clt.genus_nonnegative);
  CHECK(clt.genus_mismatches == 0);
  CHECK(std::abs(clt.genus.mean - clt.predicted_genus_mean) <= 3.0 * clt.genus.se_mean);
  // Centering at log(kn) leaves the constant gamma in the mean.
  CHECK(std::abs(clt.standardized.mean - kEulerGamma / clt.scale) <= 3.0 * clt.standardized.se_mean + 0.01);
  CHECK(clt.ks_midpoint <= 0.03);
  CHECK_THROWS_AS(clt_check(sample_faces(100, 3, 100, 1)), std::invalid_argument);
}

TEST_CASE("largest face ratio") {
  FaceCountSample single{4, 3, 0, std::vector<FaceRecord>(1000)};
  for (auto& r : single.records) {
    r.faces = 1;
    r.largest = 12;
  }
  const auto one = largest_face_ratio(single);
  CHECK(one.mean == 1.0);
  CHECK(one.se == 0.0);
  const auto perm = largest_cycle_ratio(6144, 20000, 11);
  CHECK(std::abs(perm.mean - golomb_dickman_constant()) <= 0.005);
}

TEST_CASE("Poisson-Dirichlet comparison") {
  const auto a = pd_tops(1.0, 10000, 12);
  const auto b = pd_tops(1.0, 10000, 13);
  CHECK(a == pd_tops_serial(1.0, 10000, 12));
  const auto self = pd_distance(a, b, 1.0, 14, 50);
  CHECK(self.ks < self.ks_critical_99);
  CHECK(self.ks_ci.low <= self.ks_ci.high);

  const auto faces = ranked_tops(sample_faces(2048, 3, 10000, 15));
  const auto wrong = pd_distance(faces, 5.0, 16, 50);
  MESSAGE("faces vs PD(5): KS " << wrong.ks << " (99% null " << wrong.ks_critical_99 << ")");
  CHECK(wrong.ks > 3.0 * wrong.ks_critical_99);

  const auto j = nlohmann::json::parse(to_json(self));
  for (const char* key : {"ks", "wasserstein_1", "wasserstein_2", "wasserstein_3", "trials", "theta"})
    CHECK(j.contains(key));
  CHECK(j["trials"] == 10000);
  CHECK_THROWS_AS(pd_distance(std::vector<RankedTop>(10), 1.0, 1), std::invalid_argument);
}
