#include "perfest/metrics.hpp"

#include <numeric>
#include <string>
#include <unordered_map>

#include "perfest/errors.hpp"

namespace perfest {

namespace {

// Accumulates probability mass on reduced fractions num/den with
// 0 <= num, 0 < den < 2^32.
class FractionAccumulator {
 public:
  explicit FractionAccumulator(std::size_t expected) { mass_.reserve(expected); }

  void add(std::int64_t num, std::int64_t den, double p) {
    const std::int64_t g = std::gcd(num, den);
    mass_[pack(num / g, den / g)] += p;
  }

  std::vector<DiscreteDistribution::Entry> take_entries() {
    std::vector<DiscreteDistribution::Entry> out;
    out.reserve(mass_.size());
    for (const auto& [key, p] : mass_) {
      out.emplace_back(Rational(static_cast<std::int64_t>(key >> 32),
                                static_cast<std::int64_t>(key & 0xffffffffu)),
                       p);
    }
    mass_.clear();
    return out;
  }

 private:
  static std::uint64_t pack(std::int64_t num, std::int64_t den) {
    return (static_cast<std::uint64_t>(num) << 32) | static_cast<std::uint64_t>(den);
  }

  std::unordered_map<std::uint64_t, double> mass_;
};

std::int64_t count_of(const Rational& value) {
  if (!value.is_integer() || value.num() < 0) {
    throw DomainError("count distribution has non-count support value " + value.to_string());
  }
  return value.num();
}

}  // namespace

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::accuracy: return "accuracy";
    case Metric::precision: return "precision";
    case Metric::recall: return "recall";
    case Metric::f1: return "f1";
  }
  return "unknown";
}

std::string_view to_string(EstimationMethod m) {
  return m == EstimationMethod::exact ? "exact" : "shortcut";
}

Metric parse_metric(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (to_string(m) == name) return m;
  }
  throw DomainError("unknown metric '" + std::string(name) + "'");
}

EstimationMethod parse_method(std::string_view name) {
  if (name == "exact") return EstimationMethod::exact;
  if (name == "shortcut") return EstimationMethod::shortcut;
  throw DomainError("unknown estimation method '" + std::string(name) + "'");
}

DiscreteDistribution accuracy_distribution(const PredictionBatch& batch, PmfMethod method) {
  require_nonempty(batch, "accuracy_distribution");
  std::vector<double> correct;
  correct.reserve(batch.size());
  for (const auto& r : batch.records()) correct.push_back(r.predicted == 1 ? r.score : 1.0 - r.score);
  return poisson_binomial(correct, method).divided_by(static_cast<std::int64_t>(batch.size()));
}

std::optional<DiscreteDistribution> precision_distribution(const ConfusionEstimate& est) {
  if (est.n_pos == 0) return std::nullopt;
  return est.tp.divided_by(static_cast<std::int64_t>(est.n_pos));
}

DiscreteDistribution recall_distribution(const DiscreteDistribution& tp, const DiscreteDistribution& fn) {
  const double tp_zero = tp.probability(0);
  const double fn_zero = fn.probability(0);

  FractionAccumulator acc(tp.size() * fn.size());
  acc.add(0, 1, tp_zero);
  acc.add(1, 1, fn_zero - tp_zero * fn_zero);
  for (const auto& [tp_value, tp_p] : tp.entries()) {
    const std::int64_t i = count_of(tp_value);
    if (i == 0) continue;
    for (const auto& [fn_value, fn_p] : fn.entries()) {
      const std::int64_t j = count_of(fn_value);
      if (j == 0) continue;
      const double p = tp_p * fn_p;
      if (p != 0.0) acc.add(i, i + j, p);
    }
  }
  return DiscreteDistribution::from_entries(acc.take_entries());
}

DiscreteDistribution recall_distribution(const ConfusionEstimate& est) {
  return recall_distribution(est.tp, est.fn);
}

std::optional<DiscreteDistribution> f1_distribution(const DiscreteDistribution& tp, const DiscreteDistribution& fn,
                                                    std::size_t n_pos) {
  if (n_pos == 0) return std::nullopt;
  const auto n = static_cast<std::int64_t>(n_pos);

  FractionAccumulator acc(tp.size() * fn.size());
  acc.add(0, 1, tp.probability(0));
  for (const auto& [tp_value, tp_p] : tp.entries()) {
    const std::int64_t i = count_of(tp_value);
    if (i == 0) continue;
    for (const auto& [fn_value, fn_p] : fn.entries()) {
      const std::int64_t j = count_of(fn_value);
      const double p = tp_p * fn_p;
      if (p != 0.0) acc.add(2 * i, i + j + n, p);
    }
  }
  return DiscreteDistribution::from_entries(acc.take_entries());
}

std::optional<DiscreteDistribution> f1_distribution(const ConfusionEstimate& est) {
  return f1_distribution(est.tp, est.fn, est.n_pos);
}

double shortcut_accuracy(const PredictionBatch& batch) {
  require_nonempty(batch, "shortcut_accuracy");
  double correct = 0.0;
  for (const auto& r : batch.records()) correct += r.predicted == 1 ? r.score : 1.0 - r.score;
  return correct / static_cast<double>(batch.size());
}

std::optional<double> shortcut_precision(const PredictionBatch& batch) {
  require_nonempty(batch, "shortcut_precision");
  if (batch.positive_count() == 0) return std::nullopt;
  double sum = 0.0;
  for (const auto& r : batch.records()) {
    if (r.predicted == 1) sum += r.score;
  }
  return sum / static_cast<double>(batch.positive_count());
}

std::optional<double> shortcut_recall(const PredictionBatch& batch) {
  require_nonempty(batch, "shortcut_recall");
  double pos = 0.0;
  double all = 0.0;
  for (const auto& r : batch.records()) {
    all += r.score;
    if (r.predicted == 1) pos += r.score;
  }
  if (all <= 0.0) return std::nullopt;
  return pos / all;
}

std::optional<double> shortcut_f1(const PredictionBatch& batch) {
  require_nonempty(batch, "shortcut_f1");
  if (batch.positive_count() == 0) return std::nullopt;
  double pos = 0.0;
  double all = 0.0;
  for (const auto& r : batch.records()) {
    all += r.score;
    if (r.predicted == 1) pos += r.score;
  }
  return 2.0 * pos / (all + static_cast<double>(batch.positive_count()));
}

std::vector<MetricEstimate> estimate_all(const PredictionBatch& batch, const EstimationConfig& config) {
  require_nonempty(batch, "estimate_all");
  std::vector<MetricEstimate> out;
  out.reserve(config.metrics.size());

  if (config.method == EstimationMethod::shortcut) {
    for (Metric m : config.metrics) {
      MetricEstimate e;
      e.metric = m;
      e.method = EstimationMethod::shortcut;
      switch (m) {
        case Metric::accuracy: e.point = shortcut_accuracy(batch); break;
        case Metric::precision: e.point = shortcut_precision(batch); break;
        case Metric::recall: e.point = shortcut_recall(batch); break;
        case Metric::f1: e.point = shortcut_f1(batch); break;
      }
      out.push_back(std::move(e));
    }
    return out;
  }

  std::optional<ConfusionEstimate> confusion;
  for (Metric m : config.metrics) {
    if (m != Metric::accuracy && !confusion) confusion = estimate_confusion(batch, config.pmf);

    MetricEstimate e;
    e.metric = m;
    e.method = EstimationMethod::exact;
    switch (m) {
      case Metric::accuracy: e.distribution = accuracy_distribution(batch, config.pmf); break;
      case Metric::precision: e.distribution = precision_distribution(*confusion); break;
      case Metric::recall: e.distribution = recall_distribution(*confusion); break;
      case Metric::f1: e.distribution = f1_distribution(*confusion); break;
    }
    if (e.distribution) {
      e.point = expectation(*e.distribution);
      if (config.alpha) e.hdi = hdi(*e.distribution, *config.alpha);
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace perfest
