#include "perfest/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "perfest/errors.hpp"
#include "perfest/random.hpp"

namespace perfest {

CalibrationReport ace(const PredictionBatch& batch, std::size_t num_bins) {
  const std::size_t n = batch.size();
  if (!batch.has_labels()) throw DomainError("ace: every record needs a true label");
  if (num_bins < 1 || num_bins > n) {
    throw DomainError("ace: bin count " + std::to_string(num_bins) + " must lie in [1, " + std::to_string(n) + "]");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return batch[a].score < batch[b].score; });

  CalibrationReport report;
  report.bins.reserve(num_bins);
  const std::size_t base = n / num_bins;
  const std::size_t extra = n % num_bins;
  std::size_t pos = 0;
  double gap_sum = 0.0;
  for (std::size_t b = 0; b < num_bins; ++b) {
    const std::size_t count = base + (b < extra ? 1 : 0);
    double score_sum = 0.0;
    double label_sum = 0.0;
    for (std::size_t k = 0; k < count; ++k, ++pos) {
      const auto& r = batch[order[pos]];
      score_sum += r.score;
      label_sum += *r.label;
    }
    CalibrationBin bin{score_sum / static_cast<double>(count), label_sum / static_cast<double>(count), count};
    gap_sum += std::abs(bin.mean_score - bin.positive_rate);
    report.bins.push_back(bin);
  }
  report.ace = gap_sum / static_cast<double>(num_bins);
  return report;
}

std::vector<int> reverse_sample_labels(std::span<const double> scores, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::vector<int> labels(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) labels[i] = uniform01(rng) < scores[i] ? 1 : 0;
  return labels;
}

std::vector<int> threshold_predictions(std::span<const double> scores, double threshold) {
  std::vector<int> out(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) out[i] = scores[i] >= threshold ? 1 : 0;
  return out;
}

}  // namespace perfest
