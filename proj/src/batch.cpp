#include "perfest/batch.hpp"

#include <algorithm>
#include <string>

#include "perfest/errors.hpp"

namespace perfest {

namespace {

bool is_binary(int v) { return v == 0 || v == 1; }

}  // namespace

PredictionBatch::PredictionBatch(std::vector<PredictionRecord> records) : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    if (!is_binary(r.predicted)) {
      throw DomainError("record " + std::to_string(i) + ": predicted label must be 0 or 1");
    }
    if (!(r.score >= 0.0 && r.score <= 1.0)) {
      throw DomainError("record " + std::to_string(i) + ": score " + std::to_string(r.score) +
                        " is outside [0, 1]");
    }
    if (r.label && !is_binary(*r.label)) {
      throw DomainError("record " + std::to_string(i) + ": true label must be 0 or 1");
    }
    positives_ += static_cast<std::size_t>(r.predicted);
  }
}

PredictionBatch PredictionBatch::from_columns(std::span<const int> predicted, std::span<const double> scores,
                                              std::span<const int> labels) {
  if (predicted.size() != scores.size() || (!labels.empty() && labels.size() != scores.size())) {
    throw DomainError("from_columns: column lengths differ");
  }
  std::vector<PredictionRecord> records(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    records[i].predicted = predicted[i];
    records[i].score = scores[i];
    if (!labels.empty()) records[i].label = labels[i];
  }
  return PredictionBatch(std::move(records));
}

bool PredictionBatch::has_labels() const {
  return std::all_of(records_.begin(), records_.end(), [](const auto& r) { return r.label.has_value(); });
}

std::vector<double> PredictionBatch::positive_scores() const {
  std::vector<double> out;
  out.reserve(positives_);
  for (const auto& r : records_) {
    if (r.predicted == 1) out.push_back(r.score);
  }
  return out;
}

std::vector<double> PredictionBatch::negative_scores() const {
  std::vector<double> out;
  out.reserve(negative_count());
  for (const auto& r : records_) {
    if (r.predicted == 0) out.push_back(r.score);
  }
  return out;
}

PredictionBatch PredictionBatch::slice(std::size_t offset, std::size_t count) const {
  offset = std::min(offset, records_.size());
  count = std::min(count, records_.size() - offset);
  PredictionBatch out;
  out.records_.assign(records_.begin() + static_cast<std::ptrdiff_t>(offset),
                      records_.begin() + static_cast<std::ptrdiff_t>(offset + count));
  for (const auto& r : out.records_) out.positives_ += static_cast<std::size_t>(r.predicted);
  return out;
}

void require_nonempty(const PredictionBatch& batch, const char* operation) {
  if (batch.empty()) throw DomainError(std::string(operation) + ": empty batch");
}

}  // namespace perfest
