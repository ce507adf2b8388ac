#include "srsc/dataset.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>

namespace srsc {
namespace {

std::vector<std::string> split(const std::string& line, char delimiter) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, delimiter)) out.push_back(field);
  if (!line.empty() && line.back() == delimiter) out.emplace_back();
  return out;
}

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_value(const std::string& cell, std::size_t row, std::size_t col) {
  const std::string t = trimmed(cell);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size()) {
    throw CsvError("non-numeric value '" + cell + "' at row " +
                   std::to_string(row + 1) + ", column " +
                   std::to_string(col + 1));
  }
  if (!std::isfinite(value)) {
    throw CsvError("non-finite value at row " + std::to_string(row + 1) +
                   ", column " + std::to_string(col + 1));
  }
  return value;
}

}  // namespace

Dataset::Dataset(std::vector<double> values, std::size_t dim)
    : values_(std::move(values)), m_(dim) {
  if (m_ == 0) throw std::invalid_argument("Dataset: dimension must be >= 1");
  if (values_.empty() || values_.size() % m_ != 0) {
    throw std::invalid_argument("Dataset: value count not a multiple of dim");
  }
  n_ = values_.size() / m_;
}

LabeledDataset parse_csv(const std::string& text, const CsvOptions& options) {
  std::vector<std::string> lines;
  {
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }
  while (!lines.empty() && trimmed(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw CsvError("empty input");

  std::size_t first_row = 0;
  int label_col = -1;
  std::vector<std::string> header;
  if (options.has_header) {
    header = split(lines[0], options.delimiter);
    first_row = 1;
    if (lines.size() == 1) throw CsvError("no data rows after header");
  }
  if (options.label_column) {
    if (std::holds_alternative<int>(*options.label_column)) {
      label_col = std::get<int>(*options.label_column);
    } else {
      const auto& name = std::get<std::string>(*options.label_column);
      for (std::size_t c = 0; c < header.size(); ++c) {
        if (trimmed(header[c]) == name) label_col = static_cast<int>(c);
      }
      if (label_col < 0) throw CsvError("label column '" + name + "' not found in header");
    }
  }

  std::vector<double> values;
  std::vector<std::string> labels;
  std::size_t columns = 0;
  for (std::size_t r = first_row; r < lines.size(); ++r) {
    auto fields = split(lines[r], options.delimiter);
    if (r == first_row) {
      columns = fields.size();
      if (label_col >= static_cast<int>(columns)) {
        throw CsvError("label column index " + std::to_string(label_col) +
                       " out of range (" + std::to_string(columns) + " columns)");
      }
      if (columns == 0 || (label_col >= 0 && columns == 1)) {
        throw CsvError("no feature columns");
      }
    } else if (fields.size() != columns) {
      throw CsvError("ragged row at row " + std::to_string(r + 1) + ": expected " +
                     std::to_string(columns) + " columns, got " +
                     std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (static_cast<int>(c) == label_col) {
        labels.push_back(trimmed(fields[c]));
      } else {
        values.push_back(parse_value(fields[c], r, c));
      }
    }
  }

  const std::size_t m = label_col >= 0 ? columns - 1 : columns;
  return LabeledDataset{Dataset(std::move(values), m), std::move(labels)};
}

LabeledDataset load_csv(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CsvError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), options);
}

}  // namespace srsc
