#include "perfest/experiments.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>

#include "parallel.hpp"
#include "perfest/calibration.hpp"
#include "perfest/confusion.hpp"
#include "perfest/errors.hpp"
#include "perfest/io.hpp"
#include "perfest/random.hpp"
#include "perfest/report.hpp"
#include "perfest/synthesis.hpp"

namespace perfest {

namespace {

constexpr std::size_t kMetricCount = std::size(kAllMetrics);

std::size_t metric_index(Metric m) { return static_cast<std::size_t>(m); }

void require_trials(std::size_t trials) {
  if (trials < 1) throw DomainError("experiment needs at least one trial");
}

// Random Beta scores with thresholded predictions for one trial.
struct TrialData {
  std::vector<double> scores;
  std::vector<int> predicted;
};

TrialData beta_trial(Rng& rng, std::size_t window, double threshold) {
  const BetaParams params = random_beta_params(rng);
  TrialData t;
  t.scores = sample_beta_scores(window, params, rng);
  t.predicted = threshold_predictions(t.scores, threshold);
  return t;
}

using ErrorSample = std::array<std::optional<double>, kMetricCount>;

ErrorSample convergence_trial(std::size_t window, std::size_t trial, const ConvergenceConfig& config) {
  Rng rng = make_rng(config.seed, window, trial);
  const TrialData data = beta_trial(rng, window, config.threshold);
  const auto batch = PredictionBatch::from_columns(data.predicted, data.scores);
  const ConfusionEstimate est = estimate_confusion(batch);

  ErrorSample out;
  const auto record = [&](Metric m, const std::optional<DiscreteDistribution>& dist, std::optional<double> shortcut) {
    if (dist && shortcut) out[metric_index(m)] = expectation(*dist) - *shortcut;
  };
  record(Metric::accuracy, accuracy_distribution(batch), shortcut_accuracy(batch));
  record(Metric::precision, precision_distribution(est), shortcut_precision(batch));
  record(Metric::recall, recall_distribution(est), shortcut_recall(batch));
  record(Metric::f1, f1_distribution(est), shortcut_f1(batch));
  return out;
}

enum class Outcome : std::uint8_t { skipped, covered, missed };

// outcome[metric][alpha]
using CoverageSample = std::vector<std::array<Outcome, kMetricCount>>;

CoverageSample coverage_trial(std::size_t window, std::size_t trial, const CoverageConfig& config) {
  Rng rng = make_rng(config.seed, window, trial);
  const TrialData data = beta_trial(rng, window, config.threshold);
  const std::vector<int> labels = reverse_sample_labels(data.scores, rng());
  const auto batch = PredictionBatch::from_columns(data.predicted, data.scores, labels);
  const TrueMetrics truth = true_metrics(batch);
  const ConfusionEstimate est = estimate_confusion(batch);

  std::array<std::optional<DiscreteDistribution>, kMetricCount> dists;
  dists[metric_index(Metric::accuracy)] = accuracy_distribution(batch);
  dists[metric_index(Metric::precision)] = precision_distribution(est);
  dists[metric_index(Metric::recall)] = recall_distribution(est);
  dists[metric_index(Metric::f1)] = f1_distribution(est);

  CoverageSample out(config.alphas.size());
  for (std::size_t a = 0; a < config.alphas.size(); ++a) {
    for (Metric m : kAllMetrics) {
      const auto& dist = dists[metric_index(m)];
      const auto actual = truth.exact(m);
      Outcome o = Outcome::skipped;
      if (dist && actual) o = hdi(*dist, config.alphas[a]).contains(*actual) ? Outcome::covered : Outcome::missed;
      out[a][metric_index(m)] = o;
    }
  }
  return out;
}

double parse_double_cell(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw DomainError("bad number '" + s + "'");
  return v;
}

std::size_t parse_size_cell(const std::string& s) {
  std::size_t used = 0;
  const auto v = std::stoull(s, &used);
  if (used != s.size()) throw DomainError("bad integer '" + s + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

std::vector<ConvergenceRow> run_convergence_experiment(const ConvergenceConfig& config) {
  require_trials(config.trials);
  std::vector<ConvergenceRow> rows;
  for (std::size_t window : config.window_sizes) {
    if (window < 1) throw DomainError("window sizes must be >= 1");
    std::vector<ErrorSample> samples(config.trials);
    detail::parallel_for(config.trials, config.threads,
                         [&](std::size_t t) { samples[t] = convergence_trial(window, t, config); });

    for (Metric m : kAllMetrics) {
      ConvergenceRow row{.window = window, .metric = m};
      double sum = 0.0;
      double abs_sum = 0.0;
      for (const auto& s : samples) {
        if (const auto& e = s[metric_index(m)]) {
          ++row.trials;
          sum += *e;
          abs_sum += std::abs(*e);
        }
      }
      if (row.trials > 0) {
        const double n = static_cast<double>(row.trials);
        row.mean_error = sum / n;
        row.mean_abs_error = abs_sum / n;
        double sq = 0.0;
        for (const auto& s : samples) {
          if (const auto& e = s[metric_index(m)]) sq += (*e - row.mean_error) * (*e - row.mean_error);
        }
        row.std_error = row.trials > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<CoverageRow> run_coverage_experiment(const CoverageConfig& config) {
  require_trials(config.trials);
  for (double a : config.alphas) {
    if (!(a > 0.0 && a < 1.0)) throw DomainError("coverage alphas must lie in (0, 1)");
  }
  std::vector<CoverageRow> rows;
  for (std::size_t window : config.window_sizes) {
    if (window < 1) throw DomainError("window sizes must be >= 1");
    std::vector<CoverageSample> samples(config.trials);
    detail::parallel_for(config.trials, config.threads,
                         [&](std::size_t t) { samples[t] = coverage_trial(window, t, config); });

    for (Metric m : kAllMetrics) {
      for (std::size_t a = 0; a < config.alphas.size(); ++a) {
        CoverageRow row{.window = window, .metric = m, .alpha = config.alphas[a]};
        for (const auto& s : samples) {
          const Outcome o = s[a][metric_index(m)];
          if (o == Outcome::skipped) continue;
          ++row.trials;
          if (o == Outcome::covered) ++row.covered;
        }
        row.coverage = row.trials > 0 ? static_cast<double>(row.covered) / static_cast<double>(row.trials) : 0.0;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "window,metric,trials,mean_error,mean_abs_error,std_error\n";
  for (const auto& r : rows) {
    out << r.window << ',' << to_string(r.metric) << ',' << r.trials << ',' << format_double(r.mean_error) << ','
        << format_double(r.mean_abs_error) << ',' << format_double(r.std_error) << '\n';
  }
}

std::vector<ConvergenceRow> read_convergence_csv(std::istream& in) {
  const CsvTable t = read_csv_table(in);
  const auto c_window = t.column("window");
  const auto c_metric = t.column("metric");
  const auto c_trials = t.column("trials");
  const auto c_mean = t.column("mean_error");
  const auto c_abs = t.column("mean_abs_error");
  const auto c_std = t.column("std_error");
  std::vector<ConvergenceRow> rows;
  for (const auto& cells : t.rows) {
    rows.push_back({parse_size_cell(cells[c_window]), parse_metric(cells[c_metric]), parse_size_cell(cells[c_trials]),
                    parse_double_cell(cells[c_mean]), parse_double_cell(cells[c_abs]),
                    parse_double_cell(cells[c_std])});
  }
  return rows;
}

void write_coverage_csv(std::ostream& out, const std::vector<CoverageRow>& rows) {
  out << "window,metric,alpha,trials,covered,coverage\n";
  for (const auto& r : rows) {
    out << r.window << ',' << to_string(r.metric) << ',' << format_double(r.alpha) << ',' << r.trials << ','
        << r.covered << ',' << format_double(r.coverage) << '\n';
  }
}

std::vector<CoverageRow> read_coverage_csv(std::istream& in) {
  const CsvTable t = read_csv_table(in);
  const auto c_window = t.column("window");
  const auto c_metric = t.column("metric");
  const auto c_alpha = t.column("alpha");
  const auto c_trials = t.column("trials");
  const auto c_covered = t.column("covered");
  const auto c_cov = t.column("coverage");
  std::vector<CoverageRow> rows;
  for (const auto& cells : t.rows) {
    rows.push_back({parse_size_cell(cells[c_window]), parse_metric(cells[c_metric]), parse_double_cell(cells[c_alpha]),
                    parse_size_cell(cells[c_trials]), parse_size_cell(cells[c_covered]),
                    parse_double_cell(cells[c_cov])});
  }
  return rows;
}

}  // namespace perfest
