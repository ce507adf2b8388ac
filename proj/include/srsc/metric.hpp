#ifndef SRSC_METRIC_HPP
#define SRSC_METRIC_HPP

#include <cstdint>
#include <mutex>
#include <span>
#include <unordered_set>
#include <vector>

#include "srsc/dataset.hpp"

namespace srsc {
namespace detail {

// splitmix64 finalizer; the workhorse for all deterministic hashing here.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  return mix64(mix64(a) ^ (b * 0xd6e8feb86659fd93ULL));
}

}  // namespace detail

/// Euclidean distance with a deterministic symmetric jitter so that all
/// pairwise distances are distinct and nearest neighbors are unique.
/// The jitter for a pair (i,j) is hashed from (seed, min(i,j), max(i,j)),
/// hence symmetric and stable across queries without any n x n storage.
class JitteredMetric {
 public:
  explicit JitteredMetric(const Dataset& data, std::uint64_t seed,
                          double jitter_scale = 1e-9);

  const Dataset& data() const { return *data_; }
  double jitter_scale() const { return jitter_scale_; }

  /// Plain Euclidean distance; 0 when i == j.
  double raw(int i, int j) const;

  /// Jittered distance. Symmetric, strictly positive. Throws on i == j.
  double operator()(int i, int j) const;

  /// Jitter factor u in (0, 1] for the unordered pair (i, j).
  double pair_unit(int i, int j) const;

  /// Smallest nonzero raw pairwise distance (absolute floor used to jitter
  /// exact duplicates); 1.0 if all points coincide. Computed on first use.
  double duplicate_floor() const;

 private:
  const Dataset* data_;
  std::uint64_t seed_;
  double jitter_scale_;
  mutable std::once_flag floor_once_;
  mutable double floor_ = 0.0;
};

/// Argmin of jittered distance over active \ {i}. Residual ties go to the
/// smaller index. Throws unless |active| >= 2 and i is in active.
int nearest_neighbor(int i, std::span<const int> active, const JitteredMetric& metric);

/// Argmax of jittered distance over all dataset points outside
/// exclusions and {i}. Throws when no eligible point exists.
int furthest_point(int i, const std::unordered_set<int>& exclusions,
                   const JitteredMetric& metric);

/// Exact k-d tree over a fixed point set. Nearest-neighbor queries return
/// the same answer as a linear scan under the jittered metric: the search
/// runs on raw coordinates and the jitter is applied as a post-ranking
/// tie-breaker among candidates within relative distance 2*jitter_scale
/// of the raw optimum.
class SpatialIndex {
 public:
  SpatialIndex(const JitteredMetric& metric, std::vector<int> points);

  /// Argmin of jittered distance over the indexed points minus {i}.
  /// i must be one of the indexed points.
  int nearest(int i) const;

  std::size_t size() const { return points_.size(); }

 private:
  struct Node {
    int left = -1, right = -1;
    int begin = 0, end = 0;  // leaf range into points_
    int axis = -1;
    double split = 0.0;
  };

  int build(int begin, int end, int depth);
  void search(int node, std::span<const double> q, int self, int& best,
              double& best_d2) const;
  void collect(int node, std::span<const double> q, int self, double limit_d2,
               std::vector<int>& out) const;

  const JitteredMetric* metric_;
  std::vector<int> points_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace srsc

#endif
