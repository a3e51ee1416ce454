#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "perfest/metrics.hpp"

namespace perfest {

// Desk-scale reproductions of the synthetic experiments. Every trial draws
// from make_rng(seed, window_size, trial_index); trials may run on several
// threads but results are reduced in trial order, so output depends only on
// the configuration.

struct ConvergenceConfig {
  std::vector<std::size_t> window_sizes{10, 50, 100, 200, 500};
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  double threshold = 0.5;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Error statistics of shortcut point estimates against exact expectations,
/// error = exact - shortcut. Accuracy and precision rows are controls (the
/// shortcut is an identity there); `trials` counts trials where both sides
/// were defined.
struct ConvergenceRow {
  std::size_t window = 0;
  Metric metric = Metric::recall;
  std::size_t trials = 0;
  double mean_error = 0.0;
  double mean_abs_error = 0.0;
  double std_error = 0.0;  // sample standard deviation of the error

  bool operator==(const ConvergenceRow&) const = default;
};

std::vector<ConvergenceRow> run_convergence_experiment(const ConvergenceConfig& config);

struct CoverageConfig {
  std::vector<std::size_t> window_sizes{100, 300, 500};
  std::size_t trials = 2000;
  std::vector<double> alphas{0.05, 0.10};
  std::uint64_t seed = 0;
  double threshold = 0.5;
  unsigned threads = 0;
};

/// Fraction of trials whose realized metric fell inside the (1 - alpha) HDI
/// of its estimated distribution. Trials where the metric is undefined
/// (no positive predictions for precision and F1) are excluded.
struct CoverageRow {
  std::size_t window = 0;
  Metric metric = Metric::accuracy;
  double alpha = 0.0;
  std::size_t trials = 0;
  std::size_t covered = 0;
  double coverage = 0.0;

  bool operator==(const CoverageRow&) const = default;
};

std::vector<CoverageRow> run_coverage_experiment(const CoverageConfig& config);

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);
std::vector<ConvergenceRow> read_convergence_csv(std::istream& in);
void write_coverage_csv(std::ostream& out, const std::vector<CoverageRow>& rows);
std::vector<CoverageRow> read_coverage_csv(std::istream& in);

}  // namespace perfest
