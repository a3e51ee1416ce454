#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "perfest/batch.hpp"
#include "perfest/confusion.hpp"
#include "perfest/distribution.hpp"
#include "perfest/intervals.hpp"

namespace perfest {

enum class Metric { accuracy, precision, recall, f1 };
enum class EstimationMethod { exact, shortcut };

inline constexpr Metric kAllMetrics[] = {Metric::accuracy, Metric::precision, Metric::recall, Metric::f1};

/// Window size above which the shortcut estimators are usually preferable.
/// Below it the recall and F1 approximations can be noticeably biased.
inline constexpr std::size_t kShortcutWindowGuideline = 500;

std::string_view to_string(Metric m);
std::string_view to_string(EstimationMethod m);
Metric parse_metric(std::string_view name);
EstimationMethod parse_method(std::string_view name);

// ---------------------------------------------------------------------------
// Exact distributions.
//
// An empty optional means the metric is undefined for the window (no
// positive predictions), which is not an error.
// ---------------------------------------------------------------------------

/// Number of correct predictions over n, where prediction i is correct with
/// probability score_i (positive) or 1 - score_i (negative).
DiscreteDistribution accuracy_distribution(const PredictionBatch& batch,
                                           PmfMethod method = PmfMethod::convolution);

/// X_TP / n_pos.
std::optional<DiscreteDistribution> precision_distribution(const ConfusionEstimate& est);

/// Distribution of TP / (TP + FN) over the independent joint of TP and FN.
///
/// P(0) = P(TP = 0), which includes the undefined TP = FN = 0 event;
/// P(1) = P(FN = 0) * (1 - P(TP = 0)); every other value i/(i+j) collects
/// P(TP = i) P(FN = j) for i, j >= 1.
DiscreteDistribution recall_distribution(const DiscreteDistribution& tp, const DiscreteDistribution& fn);
DiscreteDistribution recall_distribution(const ConfusionEstimate& est);

/// Distribution of 2 TP / (TP + FN + n_pos). P(0) = P(TP = 0); values for
/// i >= 1, j >= 0 collect P(TP = i) P(FN = j).
std::optional<DiscreteDistribution> f1_distribution(const DiscreteDistribution& tp, const DiscreteDistribution& fn,
                                                    std::size_t n_pos);
std::optional<DiscreteDistribution> f1_distribution(const ConfusionEstimate& est);

// ---------------------------------------------------------------------------
// Closed-form point estimates. Accuracy and precision equal the expectations
// of their distributions; recall and F1 are O(1/sqrt(n)) approximations.
// ---------------------------------------------------------------------------

double shortcut_accuracy(const PredictionBatch& batch);
std::optional<double> shortcut_precision(const PredictionBatch& batch);
/// sum of positive-prediction scores / sum of all scores; undefined if all scores are 0.
std::optional<double> shortcut_recall(const PredictionBatch& batch);
/// 2 * sum of positive-prediction scores / (sum of all scores + n_pos).
std::optional<double> shortcut_f1(const PredictionBatch& batch);

struct MetricEstimate {
  Metric metric = Metric::accuracy;
  EstimationMethod method = EstimationMethod::exact;
  std::optional<double> point;  // empty when undefined
  std::optional<DiscreteDistribution> distribution;
  std::optional<HdiInterval> hdi;

  bool undefined() const { return !point.has_value(); }
};

struct EstimationConfig {
  std::vector<Metric> metrics{std::begin(kAllMetrics), std::end(kAllMetrics)};
  EstimationMethod method = EstimationMethod::exact;
  std::optional<double> alpha;  // attach HDIs when set (exact method only)
  PmfMethod pmf = PmfMethod::convolution;
};

/// One estimate per requested metric, in request order. Undefined metrics
/// are reported as entries without a point estimate.
std::vector<MetricEstimate> estimate_all(const PredictionBatch& batch, const EstimationConfig& config);

}  // namespace perfest
