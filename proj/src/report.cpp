#include "perfest/report.hpp"

#include "perfest/errors.hpp"

namespace perfest {

namespace {

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::vector<MonitoringReport> windowed_estimates(const PredictionBatch& batch, std::size_t window_size,
                                                 const EstimationConfig& config) {
  if (window_size < 1) throw DomainError("window size must be >= 1");
  std::vector<MonitoringReport> reports;
  for (std::size_t offset = 0, index = 0; offset < batch.size(); offset += window_size, ++index) {
    const PredictionBatch window = batch.slice(offset, window_size);
    MonitoringReport r;
    r.window_index = index;
    r.window_size = window.size();
    r.partial = window.size() < window_size;
    r.estimates = estimate_all(window, config);
    for (const auto& e : r.estimates) {
      if (e.undefined()) r.undefined_metrics.push_back(e.metric);
    }
    r.config_echo = config;
    reports.push_back(std::move(r));
  }
  return reports;
}

std::optional<double> TrueMetrics::get(Metric m) const {
  switch (m) {
    case Metric::accuracy: return accuracy;
    case Metric::precision: return precision;
    case Metric::recall: return recall;
    case Metric::f1: return f1;
  }
  return std::nullopt;
}

std::optional<Rational> TrueMetrics::exact(Metric m) const {
  const auto i = [](std::size_t v) { return static_cast<std::int64_t>(v); };
  switch (m) {
    case Metric::accuracy:
      return Rational(i(tp + tn), i(tp + tn + fp + fn));
    case Metric::precision:
      if (tp + fp == 0) return std::nullopt;
      return Rational(i(tp), i(tp + fp));
    case Metric::recall:
      if (tp + fn == 0) return Rational(0);
      return Rational(i(tp), i(tp + fn));
    case Metric::f1:
      if (2 * tp + fp + fn == 0) return std::nullopt;
      return Rational(2 * i(tp), 2 * i(tp) + i(fp) + i(fn));
  }
  return std::nullopt;
}

TrueMetrics true_metrics(const PredictionBatch& batch) {
  require_nonempty(batch, "true_metrics");
  if (!batch.has_labels()) throw DomainError("true_metrics: every record needs a true label");

  TrueMetrics m;
  for (const auto& r : batch.records()) {
    const bool pos_pred = r.predicted == 1;
    const bool pos_label = *r.label == 1;
    if (pos_pred && pos_label) ++m.tp;
    else if (pos_pred) ++m.fp;
    else if (pos_label) ++m.fn;
    else ++m.tn;
  }
  const auto d = [](std::size_t v) { return static_cast<double>(v); };
  m.accuracy = d(m.tp + m.tn) / d(batch.size());
  if (m.tp + m.fp > 0) m.precision = d(m.tp) / d(m.tp + m.fp);
  if (m.tp + m.fn > 0) m.recall = d(m.tp) / d(m.tp + m.fn);
  if (2 * m.tp + m.fp + m.fn > 0) m.f1 = 2.0 * d(m.tp) / d(2 * m.tp + m.fp + m.fn);
  return m;
}

nlohmann::ordered_json to_json(const MetricEstimate& e, bool emit_distribution) {
  nlohmann::ordered_json j;
  j["metric"] = std::string(to_string(e.metric));
  j["method"] = std::string(to_string(e.method));
  j["point"] = optional_number(e.point);
  j["undefined"] = e.undefined();
  if (e.hdi) {
    j["hdi"] = {{"lower", e.hdi->lower}, {"upper", e.hdi->upper}, {"alpha", e.hdi->alpha}};
  } else {
    j["hdi"] = nullptr;
  }
  if (emit_distribution && e.distribution) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& [value, p] : e.distribution->entries()) rows.push_back({value.num(), value.den(), p});
    j["distribution"] = std::move(rows);
  } else {
    j["distribution"] = nullptr;
  }
  return j;
}

nlohmann::ordered_json to_json(const ReportConfig& config) {
  auto metrics = nlohmann::ordered_json::array();
  for (Metric m : config.estimation.metrics) metrics.push_back(std::string(to_string(m)));
  nlohmann::ordered_json j;
  j["metrics"] = std::move(metrics);
  j["method"] = std::string(to_string(config.estimation.method));
  j["alpha"] = optional_number(config.estimation.alpha);
  j["threshold"] = config.threshold;
  j["pmf"] = config.estimation.pmf == PmfMethod::fourier ? "fourier" : "convolution";
  return j;
}

nlohmann::ordered_json reports_to_json(const std::vector<MonitoringReport>& reports, const ReportConfig& config) {
  auto windows = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json w;
    w["window_index"] = r.window_index;
    w["window_size"] = r.window_size;
    w["partial"] = r.partial;
    auto estimates = nlohmann::ordered_json::array();
    for (const auto& e : r.estimates) estimates.push_back(to_json(e, config.emit_distributions));
    w["estimates"] = std::move(estimates);
    auto undefined = nlohmann::ordered_json::array();
    for (Metric m : r.undefined_metrics) undefined.push_back(std::string(to_string(m)));
    w["undefined_metrics"] = std::move(undefined);
    windows.push_back(std::move(w));
  }
  nlohmann::ordered_json j;
  j["windows"] = std::move(windows);
  j["config"] = to_json(config);
  return j;
}

nlohmann::ordered_json to_json(const TrueMetrics& m) {
  nlohmann::ordered_json j;
  j["tp"] = m.tp;
  j["fp"] = m.fp;
  j["tn"] = m.tn;
  j["fn"] = m.fn;
  j["accuracy"] = optional_number(m.accuracy);
  j["precision"] = optional_number(m.precision);
  j["recall"] = optional_number(m.recall);
  j["f1"] = optional_number(m.f1);
  return j;
}

}  // namespace perfest
