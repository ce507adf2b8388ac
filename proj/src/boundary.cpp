#include "srsc/boundary.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace srsc {

std::size_t default_sigma(std::size_t n) {
  std::size_t s = 3;
  if (n > 8) {
    s = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n))));
  }
  return std::max<std::size_t>(3, s);
}

BoundaryPairSet detect_boundary(const Dataset& data, std::size_t sigma,
                                const JitteredMetric& metric,
                                std::uint64_t seed) {
  const std::size_t n = data.size();
  if (n < 3) throw std::domain_error("detect_boundary: need at least 3 points");

  std::mt19937_64 rng(seed);
  BoundaryPairSet out;
  std::unordered_set<int> taken;

  for (std::size_t s = 0; s < sigma; ++s) {
    if (taken.size() + 1 >= n) {  // no two eligible endpoints left
      out.clamped = true;
      break;
    }
    const int start = static_cast<int>(
        std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    int first, second;
    try {
      first = furthest_point(start, taken, metric);
      auto excl = taken;
      excl.insert(first);
      second = furthest_point(first, excl, metric);
    } catch (const std::domain_error&) {
      out.clamped = true;
      break;
    }
    out.pairs.emplace_back(first, second);
    out.endpoints.push_back(first);
    out.endpoints.push_back(second);
    taken.insert(first);
    taken.insert(second);
  }
  if (out.pairs.size() < sigma) out.clamped = true;
  return out;
}

double boundary_score(int r, const BoundaryPairSet& boundary,
                      const JitteredMetric& metric) {
  if (boundary.pairs.empty()) {
    throw std::domain_error("boundary_score: empty boundary pair set");
  }
  double sum = 0.0;
  for (auto [a, b] : boundary.pairs) {
    sum += std::abs(metric.raw(r, a) - metric.raw(r, b));
  }
  return sum / static_cast<double>(boundary.pairs.size());
}

}  // namespace srsc
