#ifndef SRSC_SCORING_HPP
#define SRSC_SCORING_HPP

#include <optional>
#include <string>
#include <utility>

#include "srsc/boundary.hpp"
#include "srsc/submst.hpp"

namespace srsc {

/// Which representativeness index elects component roots.
enum class IndexMode {
  kDegree,         // d
  kAvgDegree,      // dbar
  kPath,           // c (smaller wins)
  kDistance,       // cstar (smaller wins)
  kHybrid,         // psi
  kSimplified,     // psistar (default)
};

std::string to_string(IndexMode mode);
std::optional<IndexMode> parse_index_mode(const std::string& name);

/// Per-point indices within one component.
struct PointScores {
  int d = 0;           // weighted degree
  double dbar = 0.0;   // average neighbor degree
  double c = 0.0;      // mean hop distance (self term included)
  double cstar = 0.0;  // mean length-per-hop (self term excluded)
};

int degree(const RelationshipMatrix& matrix, int i);
double avg_neighbor_degree(const RelationshipMatrix& matrix, int i);
double path_centrality(const RelationshipMatrix& matrix,
                       const SubMstForest& forest, int i);
double distance_centrality(const RelationshipMatrix& matrix,
                           const SubMstForest& forest,
                           const JitteredMetric& metric, int i);

PointScores component_scores(const RelationshipMatrix& matrix,
                             const SubMstForest& forest,
                             const JitteredMetric& metric, int i);

/// Combined score of the pair (i, j); the two values sum to 1.
std::pair<double, double> hybrid_score(const PointScores& si,
                                       const PointScores& sj);
std::pair<double, double> simplified_score(const PointScores& si,
                                           const PointScores& sj);

/// Pairwise score of one mode, normalized so bigger wins and the two
/// values sum to 1 (c and cstar are inverted: the smaller raw value wins).
std::pair<double, double> mode_score(IndexMode mode, const PointScores& si,
                                     const PointScores& sj);

/// Elects the root of a mutual pair: argmax of the mode score; on a tie
/// (relative 1e-12) falls back to the boundary score, then to the smaller
/// point index. boundary may be null (tiny datasets).
int select_root(std::pair<int, int> pair, const PointScores& si,
                const PointScores& sj, const BoundaryPairSet* boundary,
                const JitteredMetric& metric, IndexMode mode);

/// Relative tie threshold used by select_root.
inline constexpr double kScoreTieEps = 1e-12;

}  // namespace srsc

#endif
