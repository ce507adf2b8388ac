#include "srsc/submst.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace srsc {
namespace {

// Linear scans beat the tree for small levels.
constexpr std::size_t kIndexThreshold = 48;

}  // namespace

SubMstForest build_forest_ordered(const std::vector<int>& level,
                                  const JitteredMetric& metric,
                                  const std::vector<int>& start_order) {
  if (level.size() < 2) {
    throw std::domain_error("build_forest: need at least 2 points");
  }

  SubMstForest forest;
  forest.points = level;
  forest.edges.reserve(level.size() + level.size() / 2);

  std::optional<SpatialIndex> index;
  if (level.size() >= kIndexThreshold) index.emplace(metric, level);
  auto nn = [&](int i) {
    return index ? index->nearest(i) : nearest_neighbor(i, level, metric);
  };

  std::unordered_map<int, char> in_candidates;
  in_candidates.reserve(level.size());
  for (int p : level) in_candidates[p] = 1;

  for (int start : start_order) {
    if (!in_candidates[start]) continue;

    std::vector<int> chain{start};
    std::unordered_map<int, char> visited;
    visited[start] = 1;

    int current = start;
    while (true) {
      const int next = nn(current);
      forest.edges.emplace_back(current, next);
      if (visited.count(next)) {
        // Closed a mutual 2-cycle: (current, next) are reciprocal nearest
        // neighbors and the chain becomes a new component.
        const int comp = static_cast<int>(forest.components.size());
        forest.components.push_back(chain);
        forest.rnn_pairs.emplace_back(std::min(current, next),
                                      std::max(current, next));
        for (int p : chain) forest.component_of[p] = comp;
        break;
      }
      if (!in_candidates[next]) {
        // next belongs to an already-built component: attach the chain.
        const int comp = forest.component_of.at(next);
        auto& members = forest.components[comp];
        members.insert(members.end(), chain.begin(), chain.end());
        for (int p : chain) forest.component_of[p] = comp;
        break;
      }
      visited[next] = 1;
      chain.push_back(next);
      current = next;
    }
    for (int p : chain) in_candidates[p] = 0;
  }
  return forest;
}

SubMstForest build_forest(const std::vector<int>& level,
                          const JitteredMetric& metric, std::uint64_t seed) {
  std::vector<int> order = level;
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return build_forest_ordered(level, metric, order);
}

RelationshipMatrix::RelationshipMatrix(const SubMstForest& forest)
    : points_(forest.points) {
  rows_.reserve(points_.size());
  for (int p : points_) rows_[p];
  auto bump = [&](int i, int j) {
    auto& row = rows_[i];
    for (auto& [q, r] : row) {
      if (q == j) {
        ++r;
        return;
      }
    }
    row.emplace_back(j, 1);
  };
  for (auto [i, j] : forest.edges) {
    bump(i, j);
    bump(j, i);
  }
}

const std::vector<std::pair<int, int>>& RelationshipMatrix::row(int i) const {
  return rows_.at(i);
}

int RelationshipMatrix::value(int i, int j) const {
  for (auto [q, r] : rows_.at(i)) {
    if (q == j) return r;
  }
  return 0;
}

int RelationshipMatrix::degree(int i) const {
  int sum = 0;
  for (auto [q, r] : rows_.at(i)) sum += r;
  return sum;
}

RelationshipMatrix relationship_matrix(const SubMstForest& forest) {
  return RelationshipMatrix(forest);
}

std::vector<std::pair<int, int>> rnn_pairs(const RelationshipMatrix& matrix) {
  std::vector<std::pair<int, int>> pairs;
  for (int i : matrix.points()) {
    for (auto [j, r] : matrix.row(i)) {
      if (r == 2 && i < j) pairs.emplace_back(i, j);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace srsc
