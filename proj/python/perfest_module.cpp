#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "perfest/calibration.hpp"
#include "perfest/confusion.hpp"
#include "perfest/distribution.hpp"
#include "perfest/experiments.hpp"
#include "perfest/intervals.hpp"
#include "perfest/metrics.hpp"
#include "perfest/report.hpp"
#include "perfest/synthesis.hpp"

namespace py = pybind11;
using namespace perfest;

namespace {

PmfMethod pmf_from(const std::string& name) {
  if (name == "convolution") return PmfMethod::convolution;
  if (name == "fourier") return PmfMethod::fourier;
  throw DomainError("unknown pmf method '" + name + "'");
}

PredictionBatch make_batch(const std::vector<int>& predicted, const std::vector<double>& scores,
                           const std::optional<std::vector<int>>& labels) {
  return PredictionBatch::from_columns(predicted, scores, labels ? std::span<const int>(*labels) : std::span<const int>());
}

EstimationConfig make_config(const std::optional<std::vector<std::string>>& metrics, const std::string& method,
                             std::optional<double> alpha, const std::string& pmf) {
  EstimationConfig c;
  if (metrics) {
    c.metrics.clear();
    for (const auto& m : *metrics) c.metrics.push_back(parse_metric(m));
  }
  c.method = parse_method(method);
  c.alpha = alpha;
  c.pmf = pmf_from(pmf);
  return c;
}

py::object optional_or_none(const std::optional<double>& v) { return v ? py::cast(*v) : py::none(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Label-free estimation of binary-classification metrics from calibrated scores";

  py::class_<DiscreteDistribution>(m, "DiscreteDistribution")
      .def("entries",
           [](const DiscreteDistribution& d) {
             std::vector<std::tuple<std::int64_t, std::int64_t, double>> out;
             for (const auto& [v, p] : d.entries()) out.emplace_back(v.num(), v.den(), p);
             return out;
           },
           "List of (numerator, denominator, probability) sorted by value")
      .def("values",
           [](const DiscreteDistribution& d) {
             std::vector<double> out;
             for (const auto& e : d.entries()) out.push_back(e.first.to_double());
             return out;
           })
      .def("probabilities",
           [](const DiscreteDistribution& d) {
             std::vector<double> out;
             for (const auto& e : d.entries()) out.push_back(e.second);
             return out;
           })
      .def("probability", [](const DiscreteDistribution& d, std::int64_t num, std::int64_t den) {
        return d.probability(Rational(num, den));
      }, py::arg("numerator"), py::arg("denominator") = 1)
      .def("expectation", [](const DiscreteDistribution& d) { return expectation(d); })
      .def("variance", [](const DiscreteDistribution& d) { return variance(d); })
      .def("__len__", &DiscreteDistribution::size);

  py::class_<PredictionBatch>(m, "PredictionBatch")
      .def(py::init(&make_batch), py::arg("predicted"), py::arg("scores"), py::arg("labels") = py::none())
      .def("__len__", &PredictionBatch::size)
      .def_property_readonly("n_pos", &PredictionBatch::positive_count)
      .def_property_readonly("n_neg", &PredictionBatch::negative_count)
      .def_property_readonly("has_labels", &PredictionBatch::has_labels);

  py::class_<ConfusionEstimate>(m, "ConfusionEstimate")
      .def_readonly("tp", &ConfusionEstimate::tp)
      .def_readonly("fp", &ConfusionEstimate::fp)
      .def_readonly("tn", &ConfusionEstimate::tn)
      .def_readonly("fn", &ConfusionEstimate::fn)
      .def_readonly("expected_tp", &ConfusionEstimate::expected_tp)
      .def_readonly("expected_fp", &ConfusionEstimate::expected_fp)
      .def_readonly("expected_tn", &ConfusionEstimate::expected_tn)
      .def_readonly("expected_fn", &ConfusionEstimate::expected_fn)
      .def_readonly("n_pos", &ConfusionEstimate::n_pos)
      .def_readonly("n_neg", &ConfusionEstimate::n_neg);

  py::class_<HdiInterval>(m, "HdiInterval")
      .def_readonly("lower", &HdiInterval::lower)
      .def_readonly("upper", &HdiInterval::upper)
      .def_readonly("alpha", &HdiInterval::alpha)
      .def_readonly("covered_mass", &HdiInterval::covered_mass);

  py::class_<MetricEstimate>(m, "MetricEstimate")
      .def_property_readonly("metric", [](const MetricEstimate& e) { return std::string(to_string(e.metric)); })
      .def_property_readonly("method", [](const MetricEstimate& e) { return std::string(to_string(e.method)); })
      .def_readonly("point", &MetricEstimate::point)
      .def_readonly("distribution", &MetricEstimate::distribution)
      .def_readonly("hdi", &MetricEstimate::hdi)
      .def_property_readonly("undefined", &MetricEstimate::undefined);

  m.def("poisson_binomial",
        [](const std::vector<double>& p, const std::string& method) { return poisson_binomial(p, pmf_from(method)); },
        py::arg("probabilities"), py::arg("method") = "convolution");
  m.def("complement_count", &complement_count, py::arg("distribution"), py::arg("m"));

  m.def("estimate_confusion",
        [](const PredictionBatch& b, const std::string& pmf) { return estimate_confusion(b, pmf_from(pmf)); },
        py::arg("batch"), py::arg("pmf") = "convolution");
  m.def("frequency_estimates", [](const PredictionBatch& b) {
    const auto f = frequency_estimates(b);
    py::dict d;
    d["tpf"] = optional_or_none(f.tpf);
    d["fpf"] = optional_or_none(f.fpf);
    d["fnf"] = optional_or_none(f.fnf);
    d["tnf"] = optional_or_none(f.tnf);
    return d;
  });

  m.def("accuracy_distribution", [](const PredictionBatch& b) { return accuracy_distribution(b); });
  m.def("precision_distribution", py::overload_cast<const ConfusionEstimate&>(&precision_distribution));
  m.def("recall_distribution", py::overload_cast<const ConfusionEstimate&>(&recall_distribution));
  m.def("f1_distribution", py::overload_cast<const ConfusionEstimate&>(&f1_distribution));
  m.def("shortcut_accuracy", &shortcut_accuracy);
  m.def("shortcut_precision", &shortcut_precision);
  m.def("shortcut_recall", &shortcut_recall);
  m.def("shortcut_f1", &shortcut_f1);

  m.def("estimate",
        [](const PredictionBatch& b, const std::optional<std::vector<std::string>>& metrics, const std::string& method,
           std::optional<double> alpha, const std::string& pmf) {
          return estimate_all(b, make_config(metrics, method, alpha, pmf));
        },
        py::arg("batch"), py::arg("metrics") = py::none(), py::arg("method") = "exact",
        py::arg("alpha") = py::none(), py::arg("pmf") = "convolution");

  m.def("report_json",
        [](const PredictionBatch& b, std::size_t window_size, const std::optional<std::vector<std::string>>& metrics,
           const std::string& method, std::optional<double> alpha, bool emit_distributions) {
          ReportConfig rc;
          rc.estimation = make_config(metrics, method, alpha, "convolution");
          rc.emit_distributions = emit_distributions;
          return reports_to_json(windowed_estimates(b, window_size, rc.estimation), rc).dump();
        },
        py::arg("batch"), py::arg("window_size"), py::arg("metrics") = py::none(), py::arg("method") = "exact",
        py::arg("alpha") = py::none(), py::arg("emit_distributions") = false);

  m.def("hdi", &hdi, py::arg("distribution"), py::arg("alpha"));

  m.def("ace",
        [](const PredictionBatch& b, std::size_t bins) {
          const auto r = ace(b, bins);
          std::vector<std::tuple<double, double, std::size_t>> rows;
          for (const auto& bin : r.bins) rows.emplace_back(bin.mean_score, bin.positive_rate, bin.count);
          return py::make_tuple(r.ace, rows);
        },
        py::arg("batch"), py::arg("num_bins") = kDefaultAceBins);
  m.def("true_metrics", [](const PredictionBatch& b) {
    const auto t = true_metrics(b);
    py::dict d;
    for (Metric metric : kAllMetrics) d[py::str(std::string(to_string(metric)))] = optional_or_none(t.get(metric));
    return d;
  });
  m.def("reverse_sample_labels", [](const std::vector<double>& s, std::uint64_t seed) {
    return reverse_sample_labels(s, seed);
  }, py::arg("scores"), py::arg("seed"));
  m.def("threshold_predictions", [](const std::vector<double>& s, double t) { return threshold_predictions(s, t); },
        py::arg("scores"), py::arg("threshold") = 0.5);

  m.def("random_beta_params", [](std::uint64_t seed) {
    const auto p = random_beta_params(seed);
    return py::make_tuple(p.alpha_shape, p.beta_shape);
  });
  m.def("sample_beta_scores",
        [](std::size_t n, double a, double b, std::uint64_t seed) { return sample_beta_scores(n, {a, b}, seed); },
        py::arg("n"), py::arg("alpha_shape"), py::arg("beta_shape"), py::arg("seed"));

  m.def("hypersphere_dataset",
        [](std::size_t n_points, std::size_t n_dims, double easy_fraction, std::uint64_t seed, bool shifted) {
          HypersphereConfig c;
          c.n_points = n_points;
          c.n_dims = n_dims;
          c.easy_fraction = easy_fraction;
          c.seed = seed;
          SyntheticDataset data = shifted ? shift_dataset(c) : hypersphere_dataset(c);
          py::array_t<double> features({data.batch.size(), data.n_dims});
          std::copy(data.features.begin(), data.features.end(), features.mutable_data());
          return py::make_tuple(std::move(data.batch), std::move(features));
        },
        py::arg("n_points"), py::arg("n_dims") = 2, py::arg("easy_fraction") = 0.8, py::arg("seed") = 0,
        py::arg("shifted") = false);

  m.def("run_convergence_experiment",
        [](const std::vector<std::size_t>& windows, std::size_t trials, std::uint64_t seed) {
          ConvergenceConfig c;
          c.window_sizes = windows;
          c.trials = trials;
          c.seed = seed;
          py::list rows;
          for (const auto& r : run_convergence_experiment(c)) {
            rows.append(py::dict(py::arg("window") = r.window, py::arg("metric") = std::string(to_string(r.metric)),
                                 py::arg("trials") = r.trials, py::arg("mean_error") = r.mean_error,
                                 py::arg("mean_abs_error") = r.mean_abs_error, py::arg("std_error") = r.std_error));
          }
          return rows;
        },
        py::arg("window_sizes"), py::arg("trials"), py::arg("seed") = 0);
  m.def("run_coverage_experiment",
        [](const std::vector<std::size_t>& windows, std::size_t trials, const std::vector<double>& alphas,
           std::uint64_t seed) {
          CoverageConfig c;
          c.window_sizes = windows;
          c.trials = trials;
          c.alphas = alphas;
          c.seed = seed;
          py::list rows;
          for (const auto& r : run_coverage_experiment(c)) {
            rows.append(py::dict(py::arg("window") = r.window, py::arg("metric") = std::string(to_string(r.metric)),
                                 py::arg("alpha") = r.alpha, py::arg("trials") = r.trials,
                                 py::arg("coverage") = r.coverage));
          }
          return rows;
        },
        py::arg("window_sizes"), py::arg("trials"), py::arg("alphas"), py::arg("seed") = 0);
}
