#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "perfest/batch.hpp"

namespace perfest {

struct SyntheticDataset;

// Input schema. CSV: a header row naming the columns `prediction` (0/1),
// `score` (decimal in [0,1]) and optionally `label` (0/1, empty cell = no
// label); LF or CRLF line endings. JSONL: one object per line with the same
// keys. Unknown columns/keys are ignored with a warning. Blank lines are
// skipped.

enum class InputFormat { csv, jsonl };

InputFormat parse_format(std::string_view name);
/// `.jsonl`/`.ndjson`/`.json` select JSONL, anything else CSV.
InputFormat format_from_path(const std::filesystem::path& path);

/// Malformed input; `line()` is 1-based, counting the CSV header as line 1.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParsedInput {
  PredictionBatch batch;
  std::vector<std::string> warnings;
};

ParsedInput parse_csv(std::istream& in);
ParsedInput parse_jsonl(std::istream& in);
ParsedInput parse_input(const std::filesystem::path& path, InputFormat format);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

void write_batch_csv(std::ostream& out, const PredictionBatch& batch);
/// prediction,score,label,pool,x0..x{d-1}
void write_dataset_csv(std::ostream& out, const SyntheticDataset& data);

/// Generic header + string cells reader used for experiment tables.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(std::string_view name) const;
};

CsvTable read_csv_table(std::istream& in);

}  // namespace perfest
