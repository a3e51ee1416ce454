#include "perfest/synthesis.hpp"

#include <algorithm>
#include <string>

#include "perfest/errors.hpp"

namespace perfest {

namespace {

constexpr double kOutwardProbability = 0.55;
constexpr std::uint64_t kSourceStream = 0;
constexpr std::uint64_t kShiftedStream = 1;

void validate(const HypersphereConfig& c) {
  if (c.n_dims < 1) throw DomainError("hypersphere: n_dims must be >= 1");
  if (!(c.radius > 0.0)) throw DomainError("hypersphere: radius must be positive");
  if (!(c.lambda > 0.0)) throw DomainError("hypersphere: lambda must be positive");
  if (!(c.easy_fraction >= 0.0 && c.easy_fraction <= 1.0)) {
    throw DomainError("hypersphere: easy_fraction must lie in [0, 1]");
  }
}

double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

SyntheticDataset generate(const HypersphereConfig& config, double easy_fraction, std::uint64_t stream) {
  validate(config);
  const SphereLabelModel model(config.radius, config.lambda);
  const double near_hi = model.distance_for_probability(0.9);
  const double far_lo = model.distance_for_probability(0.1);
  const double far_hi = model.distance_for_probability(0.01);
  const double hard_lo = model.distance_for_probability(0.6);
  const double hard_hi = model.distance_for_probability(0.4);

  Rng rng = make_rng(config.seed, stream);
  std::normal_distribution<double> normal(0.0, 1.0);

  SyntheticDataset out;
  out.n_dims = config.n_dims;
  out.features.resize(config.n_points * config.n_dims);
  out.pools.resize(config.n_points);
  std::vector<PredictionRecord> records(config.n_points);

  for (std::size_t i = 0; i < config.n_points; ++i) {
    const Pool pool = uniform01(rng) < easy_fraction ? Pool::easy : Pool::hard;
    double lo = hard_lo;
    double hi = hard_hi;
    if (pool == Pool::easy) {
      const bool near = uniform01(rng) < 0.5;
      lo = near ? 0.0 : far_lo;
      hi = near ? near_hi : far_hi;
    }
    bool outward = uniform01(rng) < kOutwardProbability;
    if (!outward && lo >= config.radius) outward = true;
    if (!outward) hi = std::min(hi, config.radius);
    const double d = uniform(rng, lo, hi);
    const double norm_target = outward ? config.radius + d : config.radius - d;

    std::span<double> x(out.features.data() + i * config.n_dims, config.n_dims);
    double norm = 0.0;
    do {
      norm = 0.0;
      for (double& v : x) {
        v = normal(rng);
        norm += v * v;
      }
    } while (norm == 0.0);
    norm = std::sqrt(norm);
    for (double& v : x) v *= norm_target / norm;

    const double score = std::clamp(model(x), 0.0, 1.0);
    records[i].score = score;
    records[i].predicted = score >= config.threshold ? 1 : 0;
    records[i].label = uniform01(rng) < score ? 1 : 0;
    out.pools[i] = pool;
  }
  out.batch = PredictionBatch(std::move(records));
  return out;
}

}  // namespace

BetaParams random_beta_params(Rng& rng) {
  return {uniform(rng, kBetaShapeMin, kBetaShapeMax), uniform(rng, kBetaShapeMin, kBetaShapeMax)};
}

BetaParams random_beta_params(std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_beta_params(rng);
}

std::vector<double> sample_beta_scores(std::size_t n, BetaParams params, Rng& rng) {
  if (!(params.alpha_shape > 0.0 && params.beta_shape > 0.0)) {
    throw DomainError("sample_beta_scores: shape parameters must be positive");
  }
  std::vector<double> out(n);
  for (double& s : out) s = sample_beta(rng, params.alpha_shape, params.beta_shape);
  return out;
}

std::vector<double> sample_beta_scores(std::size_t n, BetaParams params, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return sample_beta_scores(n, params, rng);
}

SphereLabelModel::SphereLabelModel(double radius, double lambda) : radius_(radius), lambda_(lambda) {
  if (!(radius > 0.0) || !(lambda > 0.0)) throw DomainError("SphereLabelModel: radius and lambda must be positive");
}

double SphereLabelModel::distance(std::span<const double> x) const {
  double sq = 0.0;
  for (double v : x) sq += v * v;
  return std::abs(std::sqrt(sq) - radius_);
}

SyntheticDataset hypersphere_dataset(const HypersphereConfig& config) {
  return generate(config, config.easy_fraction, kSourceStream);
}

SyntheticDataset shift_dataset(const HypersphereConfig& config) {
  return generate(config, 1.0 - config.easy_fraction, kShiftedStream);
}

}  // namespace perfest
