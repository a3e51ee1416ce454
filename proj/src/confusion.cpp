#include "perfest/confusion.hpp"

namespace perfest {

ConfusionEstimate estimate_confusion(const PredictionBatch& batch, PmfMethod method) {
  require_nonempty(batch, "estimate_confusion");

  const std::vector<double> pos = batch.positive_scores();
  std::vector<double> neg_correct = batch.negative_scores();
  double sum_pos = 0.0;
  double sum_neg = 0.0;
  for (double s : pos) sum_pos += s;
  for (double& s : neg_correct) {
    sum_neg += s;
    s = 1.0 - s;
  }

  ConfusionEstimate est;
  est.n_pos = pos.size();
  est.n_neg = neg_correct.size();
  est.tp = poisson_binomial(pos, method);
  est.tn = poisson_binomial(neg_correct, method);
  est.fp = complement_count(est.tp, static_cast<std::int64_t>(est.n_pos));
  est.fn = complement_count(est.tn, static_cast<std::int64_t>(est.n_neg));
  est.expected_tp = sum_pos;
  est.expected_fp = static_cast<double>(est.n_pos) - sum_pos;
  est.expected_fn = sum_neg;
  est.expected_tn = static_cast<double>(est.n_neg) - sum_neg;
  return est;
}

FrequencyEstimates frequency_estimates(const PredictionBatch& batch) {
  require_nonempty(batch, "frequency_estimates");
  double sum_pos = 0.0;
  double sum_neg = 0.0;
  for (const auto& r : batch.records()) (r.predicted == 1 ? sum_pos : sum_neg) += r.score;

  FrequencyEstimates f;
  if (const auto n_pos = batch.positive_count(); n_pos > 0) {
    f.tpf = sum_pos / static_cast<double>(n_pos);
    f.fpf = 1.0 - *f.tpf;
  }
  if (const auto n_neg = batch.negative_count(); n_neg > 0) {
    f.fnf = sum_neg / static_cast<double>(n_neg);
    f.tnf = 1.0 - *f.fnf;
  }
  return f;
}

}  // namespace perfest
