#include "srsc/scoring.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace srsc {

std::string to_string(IndexMode mode) {
  switch (mode) {
    case IndexMode::kDegree: return "d";
    case IndexMode::kAvgDegree: return "dbar";
    case IndexMode::kPath: return "c";
    case IndexMode::kDistance: return "cstar";
    case IndexMode::kHybrid: return "psi";
    case IndexMode::kSimplified: return "psistar";
  }
  return "?";
}

std::optional<IndexMode> parse_index_mode(const std::string& name) {
  if (name == "d") return IndexMode::kDegree;
  if (name == "dbar") return IndexMode::kAvgDegree;
  if (name == "c") return IndexMode::kPath;
  if (name == "cstar") return IndexMode::kDistance;
  if (name == "psi") return IndexMode::kHybrid;
  if (name == "psistar") return IndexMode::kSimplified;
  return std::nullopt;
}

int degree(const RelationshipMatrix& matrix, int i) { return matrix.degree(i); }

double avg_neighbor_degree(const RelationshipMatrix& matrix, int i) {
  // Neighborhood is {j : r_ij >= 1}; the mutual partner is counted once,
  // the prefactor is the weighted degree.
  long long sum = 0;
  for (auto [j, r] : matrix.row(i)) sum += matrix.degree(j);
  return static_cast<double>(sum) / matrix.degree(i);
}

namespace {

// Hop distances from i across its component's tree edges.
std::unordered_map<int, int> bfs_hops(const RelationshipMatrix& matrix, int i) {
  std::unordered_map<int, int> hops;
  hops[i] = 0;
  std::deque<int> queue{i};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (auto [u, r] : matrix.row(v)) {
      if (!hops.count(u)) {
        hops[u] = hops[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return hops;
}

}  // namespace

double path_centrality(const RelationshipMatrix& matrix,
                       const SubMstForest& forest, int i) {
  const auto hops = bfs_hops(matrix, i);
  const auto& members = forest.components[forest.component_of.at(i)];
  long long sum = 0;
  for (int j : members) sum += hops.at(j);  // self term is 0
  return static_cast<double>(sum) / static_cast<double>(members.size());
}

double distance_centrality(const RelationshipMatrix& matrix,
                           const SubMstForest& forest,
                           const JitteredMetric& metric, int i) {
  const auto hops = bfs_hops(matrix, i);
  const auto& members = forest.components[forest.component_of.at(i)];
  double sum = 0.0;
  for (int j : members) {
    if (j == i) continue;
    sum += metric(i, j) / static_cast<double>(hops.at(j));
  }
  return sum / static_cast<double>(members.size());
}

PointScores component_scores(const RelationshipMatrix& matrix,
                             const SubMstForest& forest,
                             const JitteredMetric& metric, int i) {
  PointScores s;
  s.d = degree(matrix, i);
  s.dbar = avg_neighbor_degree(matrix, i);
  const auto hops = bfs_hops(matrix, i);
  const auto& members = forest.components[forest.component_of.at(i)];
  long long hop_sum = 0;
  double ratio_sum = 0.0;
  for (int j : members) {
    hop_sum += hops.at(j);
    if (j != i) ratio_sum += metric(i, j) / static_cast<double>(hops.at(j));
  }
  const auto size = static_cast<double>(members.size());
  s.c = static_cast<double>(hop_sum) / size;
  s.cstar = ratio_sum / size;
  return s;
}

std::pair<double, double> hybrid_score(const PointScores& si,
                                       const PointScores& sj) {
  const double a = static_cast<double>(si.d) / (si.d + sj.d);
  const double b = si.dbar / (si.dbar + sj.dbar);
  const double c = 1.0 - si.c / (si.c + sj.c);
  const double d = 1.0 - si.cstar / (si.cstar + sj.cstar);
  const double psi_i = 0.25 * (a + b + c + d);
  return {psi_i, 1.0 - psi_i};
}

std::pair<double, double> simplified_score(const PointScores& si,
                                           const PointScores& sj) {
  const double a = si.dbar / (si.dbar + sj.dbar);
  const double b = 1.0 - si.cstar / (si.cstar + sj.cstar);
  const double psi_i = 0.5 * (a + b);
  return {psi_i, 1.0 - psi_i};
}

std::pair<double, double> mode_score(IndexMode mode, const PointScores& si,
                                     const PointScores& sj) {
  switch (mode) {
    case IndexMode::kDegree: {
      const double v = static_cast<double>(si.d) / (si.d + sj.d);
      return {v, 1.0 - v};
    }
    case IndexMode::kAvgDegree: {
      const double v = si.dbar / (si.dbar + sj.dbar);
      return {v, 1.0 - v};
    }
    case IndexMode::kPath: {
      const double v = 1.0 - si.c / (si.c + sj.c);
      return {v, 1.0 - v};
    }
    case IndexMode::kDistance: {
      const double v = 1.0 - si.cstar / (si.cstar + sj.cstar);
      return {v, 1.0 - v};
    }
    case IndexMode::kHybrid:
      return hybrid_score(si, sj);
    case IndexMode::kSimplified:
      return simplified_score(si, sj);
  }
  throw std::logic_error("mode_score: bad mode");
}

int select_root(std::pair<int, int> pair, const PointScores& si,
                const PointScores& sj, const BoundaryPairSet* boundary,
                const JitteredMetric& metric, IndexMode mode) {
  const auto [vi, vj] = mode_score(mode, si, sj);
  if (std::abs(vi - vj) > kScoreTieEps * std::max(std::abs(vi), std::abs(vj))) {
    return vi > vj ? pair.first : pair.second;
  }
  if (boundary != nullptr && boundary->sigma() > 0) {
    const double zi = boundary_score(pair.first, *boundary, metric);
    const double zj = boundary_score(pair.second, *boundary, metric);
    if (zi != zj) return zi > zj ? pair.first : pair.second;
  }
  return std::min(pair.first, pair.second);
}

}  // namespace srsc
