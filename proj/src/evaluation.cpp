#include "srsc/evaluation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace srsc {
namespace {

std::vector<int> densify(const std::vector<int>& labels) {
  std::unordered_map<int, int> ids;
  std::vector<int> out;
  out.reserve(labels.size());
  for (int l : labels) {
    auto [it, fresh] = ids.emplace(l, static_cast<int>(ids.size()));
    out.push_back(it->second);
  }
  return out;
}

long long pairs2(long long c) { return c * (c - 1) / 2; }

}  // namespace

ContingencyTable ContingencyTable::build(const std::vector<int>& truth,
                                         const std::vector<int>& pred) {
  if (truth.size() != pred.size()) {
    throw std::domain_error("partition length mismatch");
  }
  const auto a = densify(truth);
  const auto b = densify(pred);
  int ka = 0, kb = 0;
  for (int v : a) ka = std::max(ka, v + 1);
  for (int v : b) kb = std::max(kb, v + 1);

  ContingencyTable t;
  t.n = static_cast<long long>(a.size());
  t.counts.assign(ka, std::vector<long long>(kb, 0));
  t.row_sums.assign(ka, 0);
  t.col_sums.assign(kb, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++t.counts[a[i]][b[i]];
    ++t.row_sums[a[i]];
    ++t.col_sums[b[i]];
  }
  return t;
}

std::vector<int> dense_labels(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, int> ids;
  std::vector<int> out;
  out.reserve(labels.size());
  for (const auto& l : labels) {
    auto [it, fresh] = ids.emplace(l, static_cast<int>(ids.size()));
    out.push_back(it->second);
  }
  return out;
}

double rand_index(const std::vector<int>& truth, const std::vector<int>& pred) {
  if (truth.size() < 2) {
    throw std::domain_error("rand_index: need at least 2 points");
  }
  const auto t = ContingencyTable::build(truth, pred);
  long long same_both = 0;
  for (const auto& row : t.counts) {
    for (long long c : row) same_both += pairs2(c);
  }
  long long same_truth = 0, same_pred = 0;
  for (long long c : t.row_sums) same_truth += pairs2(c);
  for (long long c : t.col_sums) same_pred += pairs2(c);

  const long long total = pairs2(t.n);
  const long long a = same_both;
  const long long b = total - same_truth - same_pred + same_both;
  return static_cast<double>(a + b) / static_cast<double>(total);
}

double entropy(const std::vector<int>& labels) {
  if (labels.empty()) throw std::domain_error("entropy: empty partition");
  std::unordered_map<int, long long> counts;
  for (int l : labels) ++counts[l];
  const double n = static_cast<double>(labels.size());
  double h = 0.0;
  for (auto [l, c] : counts) {
    const double p = static_cast<double>(c) / n;
    h -= p * std::log(p);
  }
  return h < 0.0 ? 0.0 : h;
}

double mutual_information(const std::vector<int>& truth,
                          const std::vector<int>& pred) {
  const auto t = ContingencyTable::build(truth, pred);
  const double n = static_cast<double>(t.n);
  double mi = 0.0;
  for (std::size_t x = 0; x < t.counts.size(); ++x) {
    for (std::size_t y = 0; y < t.counts[x].size(); ++y) {
      const long long c = t.counts[x][y];
      if (c == 0) continue;  // 0 log 0 = 0
      const double pxy = static_cast<double>(c) / n;
      const double px = static_cast<double>(t.row_sums[x]) / n;
      const double py = static_cast<double>(t.col_sums[y]) / n;
      mi += pxy * std::log(pxy / (px * py));
    }
  }
  return mi < 0.0 ? 0.0 : mi;
}

double nmi(const std::vector<int>& truth, const std::vector<int>& pred) {
  const double hx = entropy(truth);
  const double hy = entropy(pred);
  if (hx + hy == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return 2.0 * mutual_information(truth, pred) / (hx + hy);
}

}  // namespace srsc
