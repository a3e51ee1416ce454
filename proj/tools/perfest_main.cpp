// perfest: label-free performance estimation for binary classifiers.

#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "perfest/calibration.hpp"
#include "perfest/errors.hpp"
#include "perfest/experiments.hpp"
#include "perfest/io.hpp"
#include "perfest/metrics.hpp"
#include "perfest/report.hpp"
#include "perfest/synthesis.hpp"

namespace {

using namespace perfest;

struct InputOptions {
  std::string path;
  std::string format;  // empty = from extension

  ParsedInput load() const {
    const InputFormat fmt = format.empty() ? format_from_path(path) : parse_format(format);
    ParsedInput in = parse_input(path, fmt);
    for (const auto& w : in.warnings) std::cerr << "warning: " << path << ": " << w << '\n';
    return in;
  }
};

// Writes to the named file, or stdout when empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("-i,--input", in.path, "CSV or JSONL prediction file")->required()->check(CLI::ExistingFile);
  cmd->add_option("-f,--format", in.format, "Input format (default: from extension)")
      ->check(CLI::IsMember({"csv", "jsonl"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Estimate classifier accuracy, precision, recall and F1 from calibrated confidence scores"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Master random seed")->capture_default_str();

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Estimate metrics per monitoring window");
  InputOptions est_in;
  add_input_options(estimate, est_in);
  std::size_t window_size = 0;
  std::vector<std::string> metric_names{"accuracy", "precision", "recall", "f1"};
  std::string method_name = "exact";
  std::string pmf_name = "convolution";
  std::optional<double> alpha;
  bool emit_distributions = false;
  double est_threshold = 0.5;
  std::string est_out;
  estimate->add_option("-w,--window-size", window_size, "Window size (default: whole input)");
  estimate->add_option("-m,--metrics", metric_names, "Metrics to estimate")
      ->delimiter(',')
      ->check(CLI::IsMember({"accuracy", "precision", "recall", "f1"}))
      ->capture_default_str();
  estimate->add_option("--method", method_name, "exact or shortcut")
      ->check(CLI::IsMember({"exact", "shortcut"}))
      ->capture_default_str();
  estimate->add_option("--pmf", pmf_name, "Poisson-binomial routine")
      ->check(CLI::IsMember({"convolution", "fourier"}))
      ->capture_default_str();
  estimate->add_option("-a,--alpha", alpha, "Attach (1-alpha) highest-density intervals")->check(CLI::Range(0.0, 1.0));
  estimate->add_option("--threshold", est_threshold, "Decision threshold echoed in the report")->capture_default_str();
  estimate->add_flag("--emit-distributions", emit_distributions, "Include full metric distributions");
  estimate->add_option("-o,--output", est_out, "Report path (default: stdout)");

  // true-metrics
  auto* truth = app.add_subcommand("true-metrics", "Realized metrics of a labeled file");
  InputOptions truth_in;
  add_input_options(truth, truth_in);
  std::string truth_out;
  truth->add_option("-o,--output", truth_out, "Output path (default: stdout)");

  // ace
  auto* ace_cmd = app.add_subcommand("ace", "Adaptive calibration error of a labeled file");
  InputOptions ace_in;
  add_input_options(ace_cmd, ace_in);
  std::size_t bins = kDefaultAceBins;
  std::string ace_out;
  ace_cmd->add_option("-b,--bins", bins, "Number of equal-mass bins")->capture_default_str();
  ace_cmd->add_option("-o,--output", ace_out, "Output path (default: stdout)");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Synthetic experiments");
  simulate->require_subcommand(1);
  ConvergenceConfig conv;
  CoverageConfig cov;
  std::string conv_out;
  std::string cov_out;
  auto* convergence = simulate->add_subcommand("convergence", "Shortcut vs exact point estimates");
  convergence->add_option("--windows", conv.window_sizes, "Window sizes")->delimiter(',')->capture_default_str();
  convergence->add_option("--trials", conv.trials, "Trials per window")->capture_default_str();
  convergence->add_option("--threshold", conv.threshold, "Decision threshold")->capture_default_str();
  convergence->add_option("--threads", conv.threads, "Worker threads (0 = all cores)")->capture_default_str();
  convergence->add_option("-o,--output", conv_out, "CSV path (default: stdout)");
  auto* coverage = simulate->add_subcommand("coverage", "Empirical coverage of highest-density intervals");
  coverage->add_option("--windows", cov.window_sizes, "Window sizes")->delimiter(',')->capture_default_str();
  coverage->add_option("--trials", cov.trials, "Trials per window")->capture_default_str();
  coverage->add_option("--alphas", cov.alphas, "Interval alphas")->delimiter(',')->capture_default_str();
  coverage->add_option("--threshold", cov.threshold, "Decision threshold")->capture_default_str();
  coverage->add_option("--threads", cov.threads, "Worker threads (0 = all cores)")->capture_default_str();
  coverage->add_option("-o,--output", cov_out, "CSV path (default: stdout)");

  // generate
  auto* generate = app.add_subcommand("generate", "Synthetic datasets");
  generate->require_subcommand(1);
  auto* hypersphere = generate->add_subcommand("hypersphere", "Hypersphere data with a calibrated classifier");
  HypersphereConfig sphere;
  bool shifted = false;
  std::string gen_out;
  hypersphere->add_option("--dims", sphere.n_dims, "Feature dimensions")->capture_default_str();
  hypersphere->add_option("--radius", sphere.radius, "Sphere radius")->capture_default_str();
  hypersphere->add_option("--lambda", sphere.lambda, "Label-probability decay rate")->capture_default_str();
  hypersphere->add_option("--easy-fraction", sphere.easy_fraction, "Share of easy points")->capture_default_str();
  hypersphere->add_option("--points", sphere.n_points, "Number of points")->capture_default_str();
  hypersphere->add_option("--threshold", sphere.threshold, "Decision threshold")->capture_default_str();
  hypersphere->add_flag("--shift", shifted, "Generate the covariate-shifted split");
  hypersphere->add_option("-o,--output", gen_out, "CSV path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*estimate) {
      const ParsedInput in = est_in.load();
      ReportConfig config;
      config.estimation.metrics.clear();
      for (const auto& name : metric_names) config.estimation.metrics.push_back(parse_metric(name));
      config.estimation.method = parse_method(method_name);
      config.estimation.pmf = pmf_name == "fourier" ? PmfMethod::fourier : PmfMethod::convolution;
      config.estimation.alpha = alpha;
      config.threshold = est_threshold;
      config.emit_distributions = emit_distributions;
      if (in.batch.empty()) throw DomainError("input contains no records");
      const std::size_t w = window_size > 0 ? window_size : in.batch.size();
      const auto reports = windowed_estimates(in.batch, w, config.estimation);
      Output out(est_out);
      out.stream() << reports_to_json(reports, config).dump(2) << '\n';
    } else if (*truth) {
      const ParsedInput in = truth_in.load();
      Output out(truth_out);
      out.stream() << to_json(true_metrics(in.batch)).dump(2) << '\n';
    } else if (*ace_cmd) {
      const ParsedInput in = ace_in.load();
      const CalibrationReport report = ace(in.batch, bins);
      nlohmann::ordered_json j;
      j["ace"] = report.ace;
      auto rows = nlohmann::ordered_json::array();
      for (const auto& b : report.bins) {
        rows.push_back({{"mean_score", b.mean_score}, {"positive_rate", b.positive_rate}, {"count", b.count}});
      }
      j["bins"] = std::move(rows);
      Output out(ace_out);
      out.stream() << j.dump(2) << '\n';
    } else if (*convergence) {
      conv.seed = seed;
      const auto rows = run_convergence_experiment(conv);
      Output out(conv_out);
      write_convergence_csv(out.stream(), rows);
    } else if (*coverage) {
      cov.seed = seed;
      const auto rows = run_coverage_experiment(cov);
      Output out(cov_out);
      write_coverage_csv(out.stream(), rows);
    } else if (*hypersphere) {
      sphere.seed = seed;
      const SyntheticDataset data = shifted ? shift_dataset(sphere) : hypersphere_dataset(sphere);
      Output out(gen_out);
      write_dataset_csv(out.stream(), data);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
