"""Label-free estimation of binary-classification metrics from calibrated scores."""

import json

from ._core import (
    ConfusionEstimate,
    DiscreteDistribution,
    HdiInterval,
    MetricEstimate,
    PredictionBatch,
    accuracy_distribution,
    ace,
    complement_count,
    estimate,
    estimate_confusion,
    f1_distribution,
    frequency_estimates,
    hdi,
    hypersphere_dataset,
    poisson_binomial,
    precision_distribution,
    random_beta_params,
    recall_distribution,
    reverse_sample_labels,
    run_convergence_experiment,
    run_coverage_experiment,
    sample_beta_scores,
    shortcut_accuracy,
    shortcut_f1,
    shortcut_precision,
    shortcut_recall,
    threshold_predictions,
    true_metrics,
)
from ._core import report_json as _report_json

__version__ = "0.1.0"


def monitoring_report(batch, window_size, metrics=None, method="exact", alpha=None, emit_distributions=False):
    """Per-window report in the same JSON layout the CLI writes, as a dict."""
    return json.loads(_report_json(batch, window_size, metrics, method, alpha, emit_distributions))
