#include "perfest/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>

#include "json.hpp"
#include "perfest/errors.hpp"
#include "perfest/synthesis.hpp"

namespace perfest {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::optional<double> to_number(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

int binary_field(std::string_view text, std::size_t line, const char* name) {
  if (text == "0") return 0;
  if (text == "1") return 1;
  throw ParseError(line, std::string(name) + " must be 0 or 1, got '" + std::string(text) + "'");
}

double score_field(std::optional<double> v, std::size_t line) {
  if (!v) throw ParseError(line, "score is not a number");
  if (!(*v >= 0.0 && *v <= 1.0)) throw ParseError(line, "score " + format_double(*v) + " is outside [0, 1]");
  return *v;
}

int json_binary(const nlohmann::json& v, std::size_t line, const char* name) {
  if (v.is_boolean()) return v.get<bool>() ? 1 : 0;
  if (v.is_number_integer() || v.is_number_unsigned()) {
    const auto i = v.get<std::int64_t>();
    if (i == 0 || i == 1) return static_cast<int>(i);
  }
  throw ParseError(line, std::string(name) + " must be 0 or 1");
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

InputFormat parse_format(std::string_view name) {
  if (name == "csv") return InputFormat::csv;
  if (name == "jsonl") return InputFormat::jsonl;
  throw DomainError("unknown input format '" + std::string(name) + "'");
}

InputFormat format_from_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return (ext == ".jsonl" || ext == ".ndjson" || ext == ".json") ? InputFormat::jsonl : InputFormat::csv;
}

ParsedInput parse_csv(std::istream& in) {
  ParsedInput out;
  std::string line;
  std::size_t line_no = 0;

  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    for (auto cell : split(line)) header.emplace_back(cell);
  }
  if (header.empty()) throw ParseError(1, "missing header row");

  std::optional<std::size_t> pred_col, score_col, label_col;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "prediction") pred_col = c;
    else if (header[c] == "score") score_col = c;
    else if (header[c] == "label") label_col = c;
    else out.warnings.push_back("ignoring unknown column '" + header[c] + "'");
  }
  if (!pred_col || !score_col) throw ParseError(line_no, "header must name 'prediction' and 'score' columns");

  std::vector<PredictionRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) {
      throw ParseError(line_no, "expected " + std::to_string(header.size()) + " fields, found " +
                                    std::to_string(cells.size()));
    }
    PredictionRecord r;
    r.predicted = binary_field(cells[*pred_col], line_no, "prediction");
    r.score = score_field(to_number(cells[*score_col]), line_no);
    if (label_col && !cells[*label_col].empty()) r.label = binary_field(cells[*label_col], line_no, "label");
    records.push_back(r);
  }
  out.batch = PredictionBatch(std::move(records));
  return out;
}

ParsedInput parse_jsonl(std::istream& in) {
  ParsedInput out;
  std::set<std::string> warned;
  std::vector<PredictionRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto obj = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (!obj.is_object()) throw ParseError(line_no, "expected a JSON object");

    PredictionRecord r;
    bool has_pred = false;
    bool has_score = false;
    for (const auto& [key, value] : obj.items()) {
      if (key == "prediction") {
        r.predicted = json_binary(value, line_no, "prediction");
        has_pred = true;
      } else if (key == "score") {
        score_field(value.is_number() ? std::optional<double>(value.get<double>()) : std::nullopt, line_no);
        r.score = value.get<double>();
        has_score = true;
      } else if (key == "label") {
        if (!value.is_null()) r.label = json_binary(value, line_no, "label");
      } else if (warned.insert(key).second) {
        out.warnings.push_back("ignoring unknown key '" + key + "'");
      }
    }
    if (!has_pred || !has_score) throw ParseError(line_no, "object needs 'prediction' and 'score'");
    records.push_back(r);
  }
  out.batch = PredictionBatch(std::move(records));
  return out;
}

ParsedInput parse_input(const std::filesystem::path& path, InputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return format == InputFormat::jsonl ? parse_jsonl(in) : parse_csv(in);
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void write_batch_csv(std::ostream& out, const PredictionBatch& batch) {
  const bool labels = batch.has_labels() && !batch.empty();
  out << (labels ? "prediction,score,label\n" : "prediction,score\n");
  for (const auto& r : batch.records()) {
    out << r.predicted << ',' << format_double(r.score);
    if (labels) out << ',' << *r.label;
    out << '\n';
  }
}

void write_dataset_csv(std::ostream& out, const SyntheticDataset& data) {
  out << "prediction,score,label,pool";
  for (std::size_t k = 0; k < data.n_dims; ++k) out << ",x" << k;
  out << '\n';
  for (std::size_t i = 0; i < data.batch.size(); ++i) {
    const auto& r = data.batch[i];
    out << r.predicted << ',' << format_double(r.score) << ',' << r.label.value_or(0) << ','
        << (data.pools[i] == Pool::easy ? "easy" : "hard");
    for (double x : data.point(i)) out << ',' << format_double(x);
    out << '\n';
  }
}

std::size_t CsvTable::column(std::string_view name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw DomainError("table has no column '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - header.begin());
}

CsvTable read_csv_table(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    for (auto c : split(line)) cells.emplace_back(c);
    if (table.header.empty()) {
      table.header = std::move(cells);
    } else {
      if (cells.size() != table.header.size()) throw ParseError(line_no, "ragged row");
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

}  // namespace perfest
