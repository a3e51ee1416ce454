#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "perfest/calibration.hpp"
#include "perfest/synthesis.hpp"

using namespace perfest;

TEST_CASE("random beta parameters") {
  std::set<std::pair<double, double>> seen;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const auto p = random_beta_params(seed);
    CHECK(p.alpha_shape >= kBetaShapeMin);
    CHECK(p.alpha_shape <= kBetaShapeMax);
    CHECK(p.beta_shape >= kBetaShapeMin);
    CHECK(p.beta_shape <= kBetaShapeMax);
    seen.emplace(p.alpha_shape, p.beta_shape);
  }
  CHECK(seen.size() == 10000);
  CHECK(random_beta_params(17).alpha_shape == random_beta_params(17).alpha_shape);
}

TEST_CASE("beta scores") {
  const auto uniform = sample_beta_scores(100000, {1.0, 1.0}, 1);
  const double mean = std::accumulate(uniform.begin(), uniform.end(), 0.0) / 100000.0;
  CHECK(mean >= 0.497);
  CHECK(mean <= 0.503);
  CHECK(std::all_of(uniform.begin(), uniform.end(), [](double s) { return s >= 0.0 && s <= 1.0; }));

  const auto skewed = sample_beta_scores(20000, {10.0, 0.1}, 2);
  CHECK(std::accumulate(skewed.begin(), skewed.end(), 0.0) / 20000.0 > 0.9);
  CHECK(std::all_of(skewed.begin(), skewed.end(), [](double s) { return s >= 0.0 && s <= 1.0; }));

  const auto tiny = sample_beta_scores(20000, {0.1, 0.1}, 3);
  CHECK(std::all_of(tiny.begin(), tiny.end(), [](double s) { return s >= 0.0 && s <= 1.0; }));

  CHECK(sample_beta_scores(50, {2.0, 5.0}, 9) == sample_beta_scores(50, {2.0, 5.0}, 9));
}

TEST_CASE("label model on the sphere") {
  const SphereLabelModel f(3.0, std::log(std::sqrt(2.0)));
  CHECK(f.probability_at_distance(0.0) == 1.0);
  CHECK(f.probability_at_distance(std::sqrt(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(f.probability_at_distance(50.0) < 1e-300);
  CHECK(f.distance_for_probability(0.5) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  const std::vector<double> on_sphere{3.0, 0.0};
  CHECK(f(on_sphere) == 1.0);
  const std::vector<double> origin{0.0, 0.0, 0.0};
  CHECK(f.distance(origin) == 3.0);
}

TEST_CASE("hypersphere dataset") {
  HypersphereConfig config;
  config.n_points = 100000;
  config.seed = 5;
  const auto data = hypersphere_dataset(config);
  const SphereLabelModel f(config.radius, config.lambda);
  REQUIRE(data.batch.size() == config.n_points);
  REQUIRE(data.batch.has_labels());
  REQUIRE(data.features.size() == config.n_points * config.n_dims);

  std::size_t easy = 0;
  for (std::size_t i = 0; i < data.batch.size(); ++i) {
    const auto& r = data.batch[i];
    CHECK(r.score == f(data.point(i)));
    CHECK(r.predicted == (r.score >= 0.5 ? 1 : 0));
    if (data.pools[i] == Pool::easy) {
      ++easy;
      CHECK((r.score <= 0.1 + 1e-9 || r.score >= 0.9 - 1e-9));
    } else {
      CHECK(r.score >= 0.4 - 1e-9);
      CHECK(r.score <= 0.6 + 1e-9);
    }
  }
  CHECK(std::abs(static_cast<double>(easy) / 100000.0 - 0.8) < 0.01);

  // Per-bin calibration of the analytic classifier.
  const auto report = ace(data.batch, 15);
  for (const auto& bin : report.bins) CHECK(std::abs(bin.mean_score - bin.positive_rate) <= 0.02);
  CHECK(report.ace < 0.02);
}

TEST_CASE("shifted split swaps the pool proportions") {
  HypersphereConfig config;
  config.n_points = 100000;
  config.seed = 5;
  const auto data = shift_dataset(config);
  const auto easy = std::count(data.pools.begin(), data.pools.end(), Pool::easy);
  CHECK(std::abs(static_cast<double>(easy) / 100000.0 - 0.2) < 0.01);
  CHECK(ace(data.batch, 15).ace < 0.02);

  const SphereLabelModel f(config.radius, config.lambda);
  for (std::size_t i = 0; i < 1000; ++i) CHECK(data.batch[i].score == f(data.point(i)));
}

TEST_CASE("generation is deterministic per seed") {
  HypersphereConfig config;
  config.n_points = 2000;
  config.n_dims = 4;
  config.seed = 11;
  const auto a = hypersphere_dataset(config);
  const auto b = hypersphere_dataset(config);
  CHECK(a.features == b.features);
  CHECK(a.pools == b.pools);
  for (std::size_t i = 0; i < a.batch.size(); ++i) {
    CHECK(a.batch[i].score == b.batch[i].score);
    CHECK(a.batch[i].label == b.batch[i].label);
  }
  config.seed = 12;
  CHECK(hypersphere_dataset(config).features != a.features);
  CHECK(shift_dataset(config).features != hypersphere_dataset(config).features);
}

TEST_CASE("one-dimensional sphere") {
  HypersphereConfig config;
  config.n_dims = 1;
  config.n_points = 500;
  const auto data = hypersphere_dataset(config);
  CHECK(data.batch.size() == 500);
}
