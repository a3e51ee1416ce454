#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace perfest {

/// One monitored prediction: the predicted label, the calibrated probability
/// of the positive class, and the true label when it is known.
struct PredictionRecord {
  int predicted = 0;
  double score = 0.0;
  std::optional<int> label;

  bool operator==(const PredictionRecord&) const = default;
};

/// Ordered monitoring window of predictions.
///
/// Records are validated on construction (labels in {0,1}, score in [0,1]).
/// Batches whose scores are not a deterministic function of the predicted
/// label are accepted as-is.
class PredictionBatch {
 public:
  PredictionBatch() = default;
  explicit PredictionBatch(std::vector<PredictionRecord> records);

  /// Builds a batch from parallel arrays; `labels` may be empty.
  static PredictionBatch from_columns(std::span<const int> predicted, std::span<const double> scores,
                                      std::span<const int> labels = {});

  std::span<const PredictionRecord> records() const { return records_; }
  const PredictionRecord& operator[](std::size_t i) const { return records_[i]; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  std::size_t positive_count() const { return positives_; }
  std::size_t negative_count() const { return records_.size() - positives_; }
  bool has_labels() const;

  std::vector<double> positive_scores() const;
  std::vector<double> negative_scores() const;

  /// Records [offset, offset + count) as a new batch.
  PredictionBatch slice(std::size_t offset, std::size_t count) const;

  bool operator==(const PredictionBatch&) const = default;

 private:
  std::vector<PredictionRecord> records_;
  std::size_t positives_ = 0;
};

/// Throws DomainError if the batch is empty.
void require_nonempty(const PredictionBatch& batch, const char* operation);

}  // namespace perfest
