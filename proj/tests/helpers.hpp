#ifndef SRSC_TESTS_HELPERS_HPP
#define SRSC_TESTS_HELPERS_HPP

// Shared generators and independent oracles for the test suites. Oracles
// here are deliberately naive (linear scans, Prim, Floyd-Warshall, monotone
// chain hull, all-pairs Rand Index) and never call the code paths they check.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "srsc/dataset.hpp"
#include "srsc/metric.hpp"

namespace srsc_test {

inline srsc::Dataset random_dataset(std::size_t n, std::size_t m,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> values(n * m);
  for (auto& v : values) v = unit(rng);
  return srsc::Dataset(std::move(values), m);
}

inline srsc::Dataset dataset_1d(std::vector<double> xs) {
  return srsc::Dataset(std::move(xs), 1);
}

inline std::vector<int> all_indices(const srsc::Dataset& d) {
  std::vector<int> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = static_cast<int>(i);
  return out;
}

// Jittered argmin by plain linear scan, smaller index on exact ties.
inline int linear_nearest(int i, const std::vector<int>& active,
                          const srsc::JitteredMetric& metric) {
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (int j : active) {
    if (j == i) continue;
    const double d = metric(i, j);
    if (d < best_d || (d == best_d && j < best)) {
      best = j;
      best_d = d;
    }
  }
  return best;
}

inline int linear_furthest(int i, const std::set<int>& excluded,
                           const srsc::JitteredMetric& metric) {
  int best = -1;
  double best_d = -1.0;
  for (std::size_t j = 0; j < metric.data().size(); ++j) {
    const int jj = static_cast<int>(j);
    if (jj == i || excluded.count(jj)) continue;
    const double d = metric(i, jj);
    if (d > best_d || (d == best_d && jj < best)) {
      best = jj;
      best_d = d;
    }
  }
  return best;
}

// Prim's algorithm over the jittered metric; returns the unique MST as a
// set of unordered index pairs.
inline std::set<std::pair<int, int>> prim_mst(const std::vector<int>& points,
                                              const srsc::JitteredMetric& m) {
  std::set<std::pair<int, int>> edges;
  const std::size_t n = points.size();
  if (n < 2) return edges;
  std::vector<char> in_tree(n, 0);
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<int> from(n, -1);
  in_tree[0] = 1;
  for (std::size_t j = 1; j < n; ++j) {
    best[j] = m(points[0], points[j]);
    from[j] = 0;
  }
  for (std::size_t step = 1; step < n; ++step) {
    int pick = -1;
    double pick_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (!in_tree[j] && best[j] < pick_d) {
        pick = static_cast<int>(j);
        pick_d = best[j];
      }
    }
    in_tree[pick] = 1;
    edges.insert({std::min(points[pick], points[from[pick]]),
                  std::max(points[pick], points[from[pick]])});
    for (std::size_t j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      const double d = m(points[pick], points[j]);
      if (d < best[j]) {
        best[j] = d;
        from[j] = pick;
      }
    }
  }
  return edges;
}

// Andrew monotone chain; returns the indices of the 2-D hull vertices.
inline std::set<int> convex_hull_2d(const srsc::Dataset& data) {
  struct P {
    double x, y;
    int id;
  };
  std::vector<P> pts;
  for (std::size_t i = 0; i < data.size(); ++i) {
    auto p = data.point(i);
    pts.push_back({p[0], p[1], static_cast<int>(i)});
  }
  std::sort(pts.begin(), pts.end(), [](const P& a, const P& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  auto cross = [](const P& o, const P& a, const P& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<P> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  std::set<int> out;
  for (std::size_t i = 0; i + 1 < k; ++i) out.insert(hull[i].id);
  return out;
}

// All-pairs Rand Index, O(n^2).
inline double brute_rand_index(const std::vector<int>& a,
                               const std::vector<int>& b) {
  long long agree = 0, total = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const bool sa = a[i] == a[j];
      const bool sb = b[i] == b[j];
      if (sa == sb) ++agree;
      ++total;
    }
  }
  return static_cast<double>(agree) / static_cast<double>(total);
}

}  // namespace srsc_test

#endif
