#ifndef SRSC_HIERARCHY_HPP
#define SRSC_HIERARCHY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srsc/scoring.hpp"

namespace srsc {

struct ClusterConfig {
  int k = 1;
  IndexMode mode = IndexMode::kSimplified;
  std::uint64_t seed = 0;
  std::optional<std::size_t> sigma;  // boundary pairs; default policy if absent
  bool exact_k = false;
  double jitter_scale = 1e-9;
};

struct TreeNode {
  int id = 0;
  int level = 0;
  int rep = 0;                 // elected root (original point index)
  std::vector<int> children;   // node ids; empty for leaves
  std::vector<int> members;    // covered point indices; singleton for leaves
};

/// Multilevel dendrogram. Leaves are nodes 0..n-1 at level 0; each further
/// level adds one node per sub-MST component. Node ids are dense.
struct ClusterTree {
  int n = 0;
  int levels = 0;  // including the leaf level
  std::vector<TreeNode> nodes;
  std::vector<int> final_roots;  // elected reps of the top-level nodes
  std::vector<int> top_nodes;    // node ids heading the final clusters
};

struct Partition {
  std::vector<int> labels;  // cluster ids, dense from 0
  int k = 0;
};

struct ClusterResult {
  ClusterTree tree;
  Partition partition;
};

/// Runs the full level-by-level aggregation. Stops at the first level with
/// at most k components; if a level past the first would overshoot below k,
/// the previous level's clusters are kept instead. With exact_k set, any
/// surplus clusters are merged down to exactly k by linking closest roots.
ClusterResult cluster(const Dataset& data, const ClusterConfig& config);

/// Component count of a completed level, via sum of floor(r_ij / 2) / 2.
int count_roots(const RelationshipMatrix& matrix);

/// Merges the tree's final clusters down to exactly k by repeatedly linking
/// the two clusters whose representative roots are closest. Throws when
/// k exceeds the final cluster count.
Partition cut_to_k(const ClusterTree& tree, int k, const JitteredMetric& metric,
                   const BoundaryPairSet* boundary = nullptr);

/// Labels every point with the id of its final cluster.
Partition labeling(const ClusterTree& tree);

std::string export_tree(const ClusterTree& tree);
ClusterTree parse_tree(const std::string& json_text);

}  // namespace srsc

#endif
