#ifndef SRSC_EVALUATION_HPP
#define SRSC_EVALUATION_HPP

#include <string>
#include <vector>

namespace srsc {

/// Joint label counts of two partitions over the same points.
struct ContingencyTable {
  std::vector<std::vector<long long>> counts;  // [truth][pred]
  std::vector<long long> row_sums;
  std::vector<long long> col_sums;
  long long n = 0;

  static ContingencyTable build(const std::vector<int>& truth,
                                const std::vector<int>& pred);
};

/// Maps arbitrary label tokens to dense ids (first-appearance order).
std::vector<int> dense_labels(const std::vector<std::string>& labels);

/// Fraction of point pairs on which the two partitions agree.
double rand_index(const std::vector<int>& truth, const std::vector<int>& pred);

/// Natural-log entropy of the label frequencies.
double entropy(const std::vector<int>& labels);

/// Natural-log mutual information over the contingency table.
double mutual_information(const std::vector<int>& truth,
                          const std::vector<int>& pred);

/// 2*MI / (H(truth) + H(pred)); NaN when both partitions are trivial.
double nmi(const std::vector<int>& truth, const std::vector<int>& pred);

}  // namespace srsc

#endif
