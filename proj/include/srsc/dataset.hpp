#ifndef SRSC_DATASET_HPP
#define SRSC_DATASET_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace srsc {

/// Immutable n x m coordinate table. Row-major storage.
class Dataset {
 public:
  Dataset(std::vector<double> values, std::size_t dim);

  std::size_t size() const { return n_; }
  std::size_t dim() const { return m_; }

  std::span<const double> point(std::size_t i) const {
    return {values_.data() + i * m_, m_};
  }

 private:
  std::vector<double> values_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
};

/// Dataset plus optional ground-truth class labels (opaque strings).
struct LabeledDataset {
  Dataset data;
  std::vector<std::string> labels;  // empty when no ground truth

  bool has_labels() const { return !labels.empty(); }
};

struct CsvOptions {
  char delimiter = ',';
  bool has_header = true;
  // Label column selected by 0-based index or by header name.
  std::optional<std::variant<int, std::string>> label_column;
};

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LabeledDataset load_csv(const std::string& path, const CsvOptions& options = {});

/// Parses CSV text directly (same semantics as load_csv).
LabeledDataset parse_csv(const std::string& text, const CsvOptions& options = {});

}  // namespace srsc

#endif
