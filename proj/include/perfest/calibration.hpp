#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "perfest/batch.hpp"

namespace perfest {

inline constexpr std::size_t kDefaultAceBins = 15;

struct CalibrationBin {
  double mean_score = 0.0;
  double positive_rate = 0.0;
  std::size_t count = 0;
};

struct CalibrationReport {
  double ace = 0.0;
  std::vector<CalibrationBin> bins;
};

/// Adaptive (equal-mass) expected calibration error.
///
/// Records are sorted by score (ties by position) and cut into `num_bins`
/// contiguous bins whose sizes differ by at most one, the larger bins first.
/// ACE is the unweighted mean over bins of |mean score - positive rate|.
/// Requires every record to carry a true label and 1 <= num_bins <= n.
CalibrationReport ace(const PredictionBatch& batch, std::size_t num_bins = kDefaultAceBins);

/// Independent Bernoulli(score_i) labels, reproducible from `seed`.
std::vector<int> reverse_sample_labels(std::span<const double> scores, std::uint64_t seed);

/// 1 where score >= threshold.
std::vector<int> threshold_predictions(std::span<const double> scores, double threshold = 0.5);

}  // namespace perfest
