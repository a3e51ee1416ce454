#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "../support/oracles.hpp"
#include "perfest/distribution.hpp"
#include "perfest/errors.hpp"

using namespace perfest;

namespace {

double max_abs_diff(const DiscreteDistribution& a, const DiscreteDistribution& b, std::size_t n) {
  double worst = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const auto key = Rational(static_cast<std::int64_t>(k));
    worst = std::max(worst, std::abs(a.probability(key) - b.probability(key)));
  }
  return worst;
}

std::vector<double> random_params(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(n);
  for (double& v : p) v = u(rng);
  return p;
}

}  // namespace

TEST_CASE("rational values are reduced and ordered by value") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2, 3) > Rational(3, 5));
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational(7, 21).to_string() == "1/3");
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("convolution PMF of two Bernoullis") {
  const std::vector<double> p{0.8, 0.6};
  const auto d = poisson_binomial_dp(p);
  CHECK(d.size() == 3);
  CHECK(d.probability(0) == doctest::Approx(0.08).epsilon(1e-12));
  CHECK(d.probability(1) == doctest::Approx(0.44).epsilon(1e-12));
  CHECK(d.probability(2) == doctest::Approx(0.48).epsilon(1e-12));
}

TEST_CASE("degenerate Poisson-binomial inputs") {
  CHECK(poisson_binomial_dp({}) == DiscreteDistribution::point_mass(0));
  CHECK(poisson_binomial_cf({}) == DiscreteDistribution::point_mass(0));
  const std::vector<double> ones{1.0, 1.0, 1.0};
  CHECK(poisson_binomial_dp(ones) == DiscreteDistribution::point_mass(3));
  const std::vector<double> zero{0.0};
  const auto cf = poisson_binomial_cf(zero);
  CHECK(cf.probability(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cf.probability(1) < 1e-15);
}

TEST_CASE("Fourier PMF matches the binomial special case") {
  const std::vector<double> p(16, 0.5);
  const auto d = poisson_binomial_cf(p);
  CHECK(std::abs(d.probability(8) - 12870.0 / 65536.0) < 1e-12);
  CHECK(max_abs_diff(d, poisson_binomial_dp(p), 16) < 1e-12);
}

TEST_CASE("out-of-range parameters name the index") {
  const std::vector<double> bad{0.2, 1.5};
  CHECK_THROWS_WITH_AS(poisson_binomial_dp(bad), doctest::Contains("parameter 1"), DomainError);
  CHECK_THROWS_AS(poisson_binomial_cf(bad), DomainError);
  const std::vector<double> nan{std::nan("")};
  CHECK_THROWS_AS(poisson_binomial_dp(nan), DomainError);
}

TEST_CASE("both PMF routines equal 2^n enumeration for small n") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(trial % 13);
    const auto p = random_params(rng, n);
    const auto truth = perfest::testing::enumerate_poisson_binomial(p);
    const auto dp = poisson_binomial_dp(p);
    const auto cf = poisson_binomial_cf(p);
    for (std::size_t k = 0; k <= n; ++k) {
      const auto key = Rational(static_cast<std::int64_t>(k));
      CHECK(std::abs(dp.probability(key) - truth[k]) <= 1e-12);
      CHECK(std::abs(cf.probability(key) - truth[k]) <= 1e-12);
    }
  }
}

TEST_CASE("moments follow linearity") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {1u, 7u, 64u, 300u}) {
    const auto p = random_params(rng, n);
    double mean = 0.0;
    double var = 0.0;
    for (double v : p) {
      mean += v;
      var += v * (1.0 - v);
    }
    for (const auto& d : {poisson_binomial_dp(p), poisson_binomial_cf(p)}) {
      CHECK(std::abs(expectation(d) - mean) < 1e-9);
      CHECK(std::abs(variance(d) - var) < 1e-9);
      CHECK(std::abs(d.total_mass() - 1.0) < kMassTolerance);
    }
  }
}

TEST_CASE("expectation and variance examples") {
  const auto d = DiscreteDistribution::from_counts(std::vector<double>{0.08, 0.44, 0.48});
  CHECK(expectation(d) == doctest::Approx(1.4).epsilon(1e-12));
  CHECK(variance(d) == doctest::Approx(0.4).epsilon(1e-12));

  const auto coin = DiscreteDistribution::from_counts(std::vector<double>{0.5, 0.5});
  CHECK(expectation(coin) == doctest::Approx(0.5));
  CHECK(variance(coin) == doctest::Approx(0.25));

  const auto point = DiscreteDistribution::point_mass(Rational(7, 10));
  CHECK(expectation(point) == doctest::Approx(0.7));
  CHECK(variance(point) == 0.0);
}

TEST_CASE("complement_count reflects keys") {
  const auto d = DiscreteDistribution::from_counts(std::vector<double>{0.08, 0.44, 0.48});
  const auto c = complement_count(d, 2);
  CHECK(c.probability(0) == doctest::Approx(0.48));
  CHECK(c.probability(1) == doctest::Approx(0.44));
  CHECK(c.probability(2) == doctest::Approx(0.08));

  CHECK(complement_count(DiscreteDistribution::point_mass(0), 5) == DiscreteDistribution::point_mass(5));

  const std::vector<double> half(3, 0.5);
  const auto binom = poisson_binomial_dp(half);
  CHECK(total_variation(complement_count(binom, 3), binom) < 1e-15);

  CHECK_THROWS_AS(complement_count(d, 1), DomainError);
  CHECK_THROWS_AS(complement_count(DiscreteDistribution::point_mass(Rational(1, 2)), 3), DomainError);
}

TEST_CASE("complement_count is an involution") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial * 7);
    const auto d = poisson_binomial_dp(random_params(rng, n));
    const auto m = static_cast<std::int64_t>(n + static_cast<std::size_t>(trial % 3));
    CHECK(complement_count(complement_count(d, m), m) == d);
  }
}

TEST_CASE("distribution construction validates mass and merges keys") {
  using E = DiscreteDistribution::Entry;
  const auto d = DiscreteDistribution::from_entries({E{Rational(1, 2), 0.25}, E{Rational(2, 4), 0.25}, E{1, 0.5}});
  CHECK(d.size() == 2);
  CHECK(d.probability(Rational(1, 2)) == doctest::Approx(0.5));
  CHECK_THROWS_AS(DiscreteDistribution::from_entries({E{0, 0.5}}), DomainError);
  CHECK_THROWS_AS(DiscreteDistribution::from_entries({E{0, 1.2}, E{1, -0.2}}), DomainError);
  // Zero-probability support points are dropped.
  CHECK(DiscreteDistribution::from_entries({E{0, 0.0}, E{1, 1.0}}).size() == 1);
}
