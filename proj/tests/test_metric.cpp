#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "srsc/metric.hpp"

using namespace srsc;
using namespace srsc_test;

TEST_CASE("3-4-5 triangle with jitter off") {
  const auto d = Dataset({0, 0, 3, 4}, 2);
  JitteredMetric m(d, 7, 0.0);
  CHECK(m(0, 1) == doctest::Approx(5.0));
}

TEST_CASE("self-distance is a domain error") {
  const auto d = dataset_1d({0, 1});
  JitteredMetric m(d, 7);
  CHECK_THROWS_AS(m(1, 1), std::domain_error);
}

TEST_CASE("identical rows still get a strictly positive distance") {
  const auto d = Dataset({1, 2, 1, 2, 5, 6}, 2);
  JitteredMetric m(d, 42, 1e-9);
  const double dist = m(0, 1);
  CHECK(dist > 0.0);
  // bounded by jitter_scale times the duplicate floor
  CHECK(dist <= 1e-9 * m.duplicate_floor());
}

TEST_CASE("all points coincide: floor falls back to 1") {
  const auto d = Dataset({3, 3, 3}, 1);
  JitteredMetric m(d, 1, 1e-9);
  CHECK(m.duplicate_floor() == 1.0);
  CHECK(m(0, 2) > 0.0);
  CHECK(m(0, 2) <= 1e-9);
}

TEST_CASE("jitter bounded relative to the raw distance") {
  const auto d = random_dataset(50, 3, 11);
  JitteredMetric m(d, 11);
  for (int i = 0; i < 50; ++i) {
    for (int j = i + 1; j < 50; ++j) {
      const double raw = m.raw(i, j);
      const double jit = m(i, j);
      CHECK(jit >= raw);
      CHECK(jit > 0.0);
      CHECK(jit - raw <= 1e-9 * raw * (1.0 + 1e-6));
    }
  }
}

TEST_CASE("symmetry: 1000 random pairs, both call orders") {
  const auto d = random_dataset(200, 4, 42);
  JitteredMetric m(d, 42);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> pick(0, 199);
  for (int t = 0; t < 1000; ++t) {
    const int i = pick(rng);
    int j = pick(rng);
    if (i == j) j = (j + 1) % 200;
    CHECK(m(i, j) == m(j, i));
  }
}

TEST_CASE("all jittered pairwise distances are distinct on 100 points") {
  const auto d = random_dataset(100, 2, 5);
  JitteredMetric m(d, 5);
  std::set<double> seen;
  for (int i = 0; i < 100; ++i) {
    for (int j = i + 1; j < 100; ++j) seen.insert(m(i, j));
  }
  CHECK(seen.size() == 100u * 99u / 2u);
}

TEST_CASE("determinism under a fixed seed") {
  const auto d = random_dataset(64, 3, 9);
  JitteredMetric a(d, 123), b(d, 123);
  const auto idx = all_indices(d);
  for (int i = 0; i < 64; ++i) {
    CHECK(nearest_neighbor(i, idx, a) == nearest_neighbor(i, idx, b));
  }
}

TEST_CASE("nearest_neighbor 1-D examples") {
  const auto d = dataset_1d({0, 1, 3});
  JitteredMetric m(d, 3);
  const auto idx = all_indices(d);
  CHECK(nearest_neighbor(0, idx, m) == 1);
  CHECK(nearest_neighbor(2, idx, m) == 1);
  CHECK_THROWS_AS(nearest_neighbor(0, std::vector<int>{0}, m),
                  std::domain_error);
}

TEST_CASE("furthest_point 1-D examples") {
  const auto d = dataset_1d({0, 1, 5, 6});
  JitteredMetric m(d, 3);
  CHECK(furthest_point(1, {}, m) == 3);
  CHECK(furthest_point(3, {}, m) == 0);
  CHECK_THROWS_AS(furthest_point(0, {1, 2, 3}, m), std::domain_error);
}

TEST_CASE("nearest_neighbor agrees with a linear-scan oracle") {
  const auto d = random_dataset(200, 2, 77);
  JitteredMetric m(d, 77);
  const auto idx = all_indices(d);
  for (int i = 0; i < 200; ++i) {
    CHECK(nearest_neighbor(i, idx, m) == linear_nearest(i, idx, m));
  }
}

TEST_CASE("furthest_point agrees with a linear-scan oracle") {
  const auto d = random_dataset(200, 2, 78);
  JitteredMetric m(d, 78);
  for (int i = 0; i < 200; ++i) {
    CHECK(furthest_point(i, {}, m) == linear_furthest(i, {}, m));
  }
}

TEST_CASE("SpatialIndex matches the linear scan on every query") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const auto d = random_dataset(200, 2, seed);
    JitteredMetric m(d, seed);
    const auto idx = all_indices(d);
    SpatialIndex index(m, idx);
    for (int i = 0; i < 200; ++i) {
      CHECK(index.nearest(i) == linear_nearest(i, idx, m));
    }
  }
}

TEST_CASE("SpatialIndex over a subset and with duplicate points") {
  auto base = random_dataset(120, 3, 4);
  std::vector<double> values;
  for (std::size_t i = 0; i < base.size(); ++i) {
    auto p = base.point(i);
    values.insert(values.end(), p.begin(), p.end());
  }
  // duplicate the first ten rows
  for (std::size_t i = 0; i < 10; ++i) {
    auto p = base.point(i);
    values.insert(values.end(), p.begin(), p.end());
  }
  const Dataset d(std::move(values), 3);
  JitteredMetric m(d, 4);

  std::vector<int> subset;
  for (int i = 0; i < static_cast<int>(d.size()); i += 2) subset.push_back(i);
  SpatialIndex index(m, subset);
  for (int i : subset) {
    CHECK(index.nearest(i) == linear_nearest(i, subset, m));
  }
}
