#include "srsc/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace srsc {
namespace {

double sqdist(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

}  // namespace

JitteredMetric::JitteredMetric(const Dataset& data, std::uint64_t seed,
                               double jitter_scale)
    : data_(&data), seed_(seed), jitter_scale_(jitter_scale) {}

double JitteredMetric::raw(int i, int j) const {
  return std::sqrt(sqdist(data_->point(i), data_->point(j)));
}

double JitteredMetric::pair_unit(int i, int j) const {
  const auto lo = static_cast<std::uint64_t>(std::min(i, j));
  const auto hi = static_cast<std::uint64_t>(std::max(i, j));
  const std::uint64_t h = detail::mix64(detail::mix64(seed_, lo), hi);
  // 53-bit mantissa -> (0, 1]
  return (static_cast<double>(h >> 11) + 1.0) * 0x1.0p-53;
}

double JitteredMetric::duplicate_floor() const {
  std::call_once(floor_once_, [this] {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = data_->size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d2 = sqdist(data_->point(i), data_->point(j));
        if (d2 > 0.0 && d2 < best) best = d2;
      }
    }
    floor_ = std::isinf(best) ? 1.0 : std::sqrt(best);
  });
  return floor_;
}

double JitteredMetric::operator()(int i, int j) const {
  if (i == j) throw std::domain_error("JitteredMetric: self-distance queried");
  const double d = raw(i, j);
  if (jitter_scale_ == 0.0) return d;
  const double u = pair_unit(i, j);
  const double base = d > 0.0 ? d : duplicate_floor();
  return d + jitter_scale_ * base * u;
}

int nearest_neighbor(int i, std::span<const int> active,
                     const JitteredMetric& metric) {
  if (active.size() < 2) {
    throw std::domain_error("nearest_neighbor: need at least 2 active points");
  }
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  bool saw_self = false;
  for (int j : active) {
    if (j == i) {
      saw_self = true;
      continue;
    }
    const double d = metric(i, j);
    if (d < best_d || (d == best_d && j < best)) {
      best = j;
      best_d = d;
    }
  }
  if (!saw_self) throw std::domain_error("nearest_neighbor: i not in active set");
  return best;
}

int furthest_point(int i, const std::unordered_set<int>& exclusions,
                   const JitteredMetric& metric) {
  const int n = static_cast<int>(metric.data().size());
  int best = -1;
  double best_d = -1.0;
  for (int j = 0; j < n; ++j) {
    if (j == i || exclusions.contains(j)) continue;
    const double d = metric(i, j);
    if (d > best_d || (d == best_d && j < best)) {
      best = j;
      best_d = d;
    }
  }
  if (best < 0) throw std::domain_error("furthest_point: no eligible point");
  return best;
}

SpatialIndex::SpatialIndex(const JitteredMetric& metric, std::vector<int> points)
    : metric_(&metric), points_(std::move(points)) {
  if (!points_.empty()) {
    nodes_.reserve(2 * points_.size() / 8 + 4);
    root_ = build(0, static_cast<int>(points_.size()), 0);
  }
}

int SpatialIndex::build(int begin, int end, int depth) {
  Node node;
  node.begin = begin;
  node.end = end;
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  if (end - begin <= 8) return id;

  const int axis = depth % static_cast<int>(metric_->data().dim());
  const int mid = (begin + end) / 2;
  std::nth_element(points_.begin() + begin, points_.begin() + mid,
                   points_.begin() + end, [&](int a, int b) {
                     return metric_->data().point(a)[axis] <
                            metric_->data().point(b)[axis];
                   });
  const double split = metric_->data().point(points_[mid])[axis];
  const int left = build(begin, mid, depth + 1);
  const int right = build(mid, end, depth + 1);
  nodes_[id].axis = axis;
  nodes_[id].split = split;
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

void SpatialIndex::search(int node, std::span<const double> q, int self,
                          int& best, double& best_d2) const {
  const Node& nd = nodes_[node];
  if (nd.axis < 0) {
    for (int p = nd.begin; p < nd.end; ++p) {
      const int j = points_[p];
      if (j == self) continue;
      const double d2 = [&] {
        double s = 0.0;
        auto pj = metric_->data().point(j);
        for (std::size_t k = 0; k < q.size(); ++k) {
          const double d = q[k] - pj[k];
          s += d * d;
        }
        return s;
      }();
      if (d2 < best_d2 || (d2 == best_d2 && (best < 0 || j < best))) {
        best = j;
        best_d2 = d2;
      }
    }
    return;
  }
  const double delta = q[nd.axis] - nd.split;
  const int near = delta < 0.0 ? nd.left : nd.right;
  const int far = delta < 0.0 ? nd.right : nd.left;
  search(near, q, self, best, best_d2);
  if (delta * delta <= best_d2) search(far, q, self, best, best_d2);
}

void SpatialIndex::collect(int node, std::span<const double> q, int self,
                           double limit_d2, std::vector<int>& out) const {
  const Node& nd = nodes_[node];
  if (nd.axis < 0) {
    for (int p = nd.begin; p < nd.end; ++p) {
      const int j = points_[p];
      if (j == self) continue;
      double s = 0.0;
      auto pj = metric_->data().point(j);
      for (std::size_t k = 0; k < q.size(); ++k) {
        const double d = q[k] - pj[k];
        s += d * d;
      }
      if (s <= limit_d2) out.push_back(j);
    }
    return;
  }
  const double delta = q[nd.axis] - nd.split;
  const int near = delta < 0.0 ? nd.left : nd.right;
  const int far = delta < 0.0 ? nd.right : nd.left;
  collect(near, q, self, limit_d2, out);
  if (delta * delta <= limit_d2) collect(far, q, self, limit_d2, out);
}

int SpatialIndex::nearest(int i) const {
  if (points_.size() < 2) {
    throw std::domain_error("SpatialIndex: need at least 2 indexed points");
  }
  const auto q = metric_->data().point(i);
  int best = -1;
  double best_d2 = std::numeric_limits<double>::infinity();
  search(root_, q, i, best, best_d2);

  // Jitter cannot flip the raw argmin except among raw near-ties, so it is
  // enough to re-rank candidates within relative 2*jitter_scale of the
  // raw optimum under the jittered metric.
  const double raw_best = std::sqrt(best_d2);
  const double limit = raw_best * (1.0 + 2.0 * metric_->jitter_scale());
  std::vector<int> candidates;
  collect(root_, q, i, limit * limit, candidates);

  int winner = best;
  double winner_d = (*metric_)(i, best);
  for (int j : candidates) {
    if (j == best) continue;
    const double d = (*metric_)(i, j);
    if (d < winner_d || (d == winner_d && j < winner)) {
      winner = j;
      winner_d = d;
    }
  }
  return winner;
}

}  // namespace srsc
