#ifndef SRSC_BOUNDARY_HPP
#define SRSC_BOUNDARY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "srsc/metric.hpp"

namespace srsc {

/// Farthest-of-farthest boundary sample: sigma point pairs whose endpoints
/// are all distinct (endpoints are excluded from later searches).
struct BoundaryPairSet {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> endpoints;
  bool clamped = false;  // fewer pairs than requested (tiny input)

  std::size_t sigma() const { return pairs.size(); }
};

/// Default pair count: max(3, ceil(log2 n)).
std::size_t default_sigma(std::size_t n);

/// For each of sigma seeded random starts x: take the furthest eligible
/// point from x, then the furthest eligible point from that one; both
/// become boundary endpoints and are excluded from later searches.
/// Throws for n < 3.
BoundaryPairSet detect_boundary(const Dataset& data, std::size_t sigma,
                                const JitteredMetric& metric,
                                std::uint64_t seed);

/// Mean absolute difference of raw distances from r to the two endpoints
/// of each boundary pair. Larger means closer to the data boundary.
double boundary_score(int r, const BoundaryPairSet& boundary,
                      const JitteredMetric& metric);

}  // namespace srsc

#endif
