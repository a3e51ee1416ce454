#pragma once

#include <cstddef>
#include <optional>

#include "perfest/batch.hpp"
#include "perfest/distribution.hpp"

namespace perfest {

/// Estimated confusion matrix of a window.
///
/// Under calibration the number of true positives among the positive
/// predictions is Poisson-binomial with the positive-prediction scores as
/// parameters; true negatives likewise with 1 - score over the negative
/// predictions. FP and FN are the count complements of TP and TN.
struct ConfusionEstimate {
  DiscreteDistribution tp;
  DiscreteDistribution fp;
  DiscreteDistribution tn;
  DiscreteDistribution fn;
  double expected_tp = 0.0;
  double expected_fp = 0.0;
  double expected_tn = 0.0;
  double expected_fn = 0.0;
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
};

ConfusionEstimate estimate_confusion(const PredictionBatch& batch,
                                     PmfMethod method = PmfMethod::convolution);

/// Relative confusion-cell frequencies: mean positive-prediction score and
/// its complement, mean negative-prediction score and its complement.
/// A pair is absent when its prediction class is empty.
struct FrequencyEstimates {
  std::optional<double> tpf;
  std::optional<double> fpf;
  std::optional<double> fnf;
  std::optional<double> tnf;
};

FrequencyEstimates frequency_estimates(const PredictionBatch& batch);

}  // namespace perfest
