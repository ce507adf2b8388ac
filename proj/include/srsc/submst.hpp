#ifndef SRSC_SUBMST_HPP
#define SRSC_SUBMST_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "srsc/metric.hpp"

namespace srsc {

/// One level's nearest-neighbor edge graph. Every traversed point emits one
/// directed edge to its nearest neighbor; the mutual pair that closes each
/// chain is recorded with both directions, so each weakly connected
/// component (a sub-MST) carries exactly one mutual 2-cycle.
struct SubMstForest {
  std::vector<int> points;                      // this level's point ids
  std::vector<std::pair<int, int>> edges;       // directed (i -> nn(i))
  std::vector<std::vector<int>> components;     // discovery order
  std::vector<std::pair<int, int>> rnn_pairs;   // one per component
  std::unordered_map<int, int> component_of;    // point id -> component id
};

/// Symmetric sparse matrix R = A + A^T of the forest's directed edges.
/// Entries are in {0,1,2}; r_ij = 2 exactly at mutual nearest neighbors.
class RelationshipMatrix {
 public:
  explicit RelationshipMatrix(const SubMstForest& forest);

  const std::vector<int>& points() const { return points_; }

  /// (j, r_ij) for all nonzero entries of row i.
  const std::vector<std::pair<int, int>>& row(int i) const;

  int value(int i, int j) const;

  /// Weighted row sum: the mutual partner counts 2.
  int degree(int i) const;

 private:
  std::vector<int> points_;
  std::unordered_map<int, std::vector<std::pair<int, int>>> rows_;
};

/// Builds the forest with chain starts drawn uniformly (seeded) from the
/// shrinking candidate set. Nearest neighbors are taken over the whole
/// level so a chain may attach to an already-built component.
SubMstForest build_forest(const std::vector<int>& level,
                          const JitteredMetric& metric, std::uint64_t seed);

/// Same, with an explicit start preference order (for tests).
SubMstForest build_forest_ordered(const std::vector<int>& level,
                                  const JitteredMetric& metric,
                                  const std::vector<int>& start_order);

RelationshipMatrix relationship_matrix(const SubMstForest& forest);

/// Unordered pairs with r_ij = 2, one per component.
std::vector<std::pair<int, int>> rnn_pairs(const RelationshipMatrix& matrix);

}  // namespace srsc

#endif
