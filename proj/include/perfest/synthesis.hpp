#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "perfest/batch.hpp"
#include "perfest/random.hpp"

namespace perfest {

struct BetaParams {
  double alpha_shape = 1.0;
  double beta_shape = 1.0;
};

inline constexpr double kBetaShapeMin = 0.1;
inline constexpr double kBetaShapeMax = 10.0;

/// Both shapes uniform on [0.1, 10].
BetaParams random_beta_params(std::uint64_t seed);
BetaParams random_beta_params(Rng& rng);

std::vector<double> sample_beta_scores(std::size_t n, BetaParams params, std::uint64_t seed);
std::vector<double> sample_beta_scores(std::size_t n, BetaParams params, Rng& rng);

// ---------------------------------------------------------------------------
// Hypersphere covariate-shift data.
//
// Points live in R^n_dims. With d the distance to the sphere of radius r,
// the label is positive with probability exp(-lambda d^2), and the score of
// the synthetic classifier is that same probability, so it is calibrated by
// construction. Points come from two pools:
//   easy: d in [0, d(0.9)] or [d(0.1), d(0.01)] with equal probability
//   hard: d in [d(0.6), d(0.4)]
// where d(q) solves exp(-lambda d^2) = q, d uniform inside its range. The
// offset is taken outwards with probability 0.55 (inwards offsets are
// capped at the radius), which skews the label balance slightly.
// Directions are normalized standard-normal vectors.
// ---------------------------------------------------------------------------

struct HypersphereConfig {
  std::size_t n_dims = 2;
  double radius = 3.0;
  double lambda = std::log(std::sqrt(2.0));
  double easy_fraction = 0.8;
  std::size_t n_points = 100000;
  std::uint64_t seed = 0;
  double threshold = 0.5;
};

/// Label probability as a function of position. Source and shifted data
/// share one instance per config, so p(y | x) is identical across splits.
class SphereLabelModel {
 public:
  SphereLabelModel(double radius, double lambda);

  double distance(std::span<const double> x) const;
  double probability_at_distance(double d) const { return std::exp(-lambda_ * d * d); }
  double operator()(std::span<const double> x) const { return probability_at_distance(distance(x)); }

  /// Distance at which the label probability equals q, for q in (0, 1].
  double distance_for_probability(double q) const { return std::sqrt(-std::log(q) / lambda_); }

  double radius() const { return radius_; }
  double lambda() const { return lambda_; }

 private:
  double radius_;
  double lambda_;
};

enum class Pool : std::uint8_t { easy, hard };

struct SyntheticDataset {
  PredictionBatch batch;        // predicted label, score, true label
  std::size_t n_dims = 0;
  std::vector<double> features;  // row-major, batch.size() x n_dims
  std::vector<Pool> pools;

  std::span<const double> point(std::size_t i) const { return {features.data() + i * n_dims, n_dims}; }
};

SyntheticDataset hypersphere_dataset(const HypersphereConfig& config);

/// Same generator with the easy fraction replaced by 1 - easy_fraction and
/// an independent random stream. The label model is unchanged.
SyntheticDataset shift_dataset(const HypersphereConfig& config);

}  // namespace perfest
