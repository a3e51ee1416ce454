#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "perfest/batch.hpp"
#include "perfest/metrics.hpp"

namespace perfest {

struct ReportConfig {
  EstimationConfig estimation;
  double threshold = 0.5;
  bool emit_distributions = false;
};

struct MonitoringReport {
  std::size_t window_index = 0;
  std::size_t window_size = 0;
  bool partial = false;
  std::vector<MetricEstimate> estimates;
  std::vector<Metric> undefined_metrics;
  EstimationConfig config_echo;
};

/// Consecutive disjoint windows of `window_size`; a shorter trailing window
/// is still processed and flagged `partial`.
std::vector<MonitoringReport> windowed_estimates(const PredictionBatch& batch, std::size_t window_size,
                                                 const EstimationConfig& config);

/// Realized metrics from predicted and true labels. Absent where the
/// denominator is zero.
struct TrueMetrics {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;
  std::optional<double> accuracy;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;

  std::optional<double> get(Metric m) const;
  /// Exact value of the metric, with recall = 0 when TP + FN = 0 to match
  /// the convention of the recall distribution.
  std::optional<Rational> exact(Metric m) const;
};

TrueMetrics true_metrics(const PredictionBatch& batch);

nlohmann::ordered_json to_json(const MetricEstimate& e, bool emit_distribution);
nlohmann::ordered_json to_json(const ReportConfig& config);
/// {"windows": [...], "config": {...}}
nlohmann::ordered_json reports_to_json(const std::vector<MonitoringReport>& reports, const ReportConfig& config);
nlohmann::ordered_json to_json(const TrueMetrics& m);

}  // namespace perfest
