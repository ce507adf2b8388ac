#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "srsc/evaluation.hpp"

using namespace srsc;
using namespace srsc_test;

TEST_CASE("rand index basics") {
  CHECK(rand_index({0, 0, 1, 1}, {0, 0, 1, 1}) == doctest::Approx(1.0));
  CHECK(rand_index({0, 0, 1, 1}, {1, 1, 0, 0}) == doctest::Approx(1.0));
  CHECK(rand_index({0, 0, 1, 1}, {0, 1, 0, 1}) == doctest::Approx(1.0 / 3));
  CHECK_THROWS_AS(rand_index({0}, {0}), std::domain_error);
  CHECK_THROWS_AS(rand_index({0, 1}, {0, 1, 2}), std::domain_error);
}

TEST_CASE("entropy basics") {
  CHECK(entropy({5, 5, 5}) == doctest::Approx(0.0));
  CHECK(entropy({0, 0, 1, 1}) == doctest::Approx(std::log(2.0)));
  CHECK(entropy({0, 0, 0, 1}) == doctest::Approx(0.562335).epsilon(1e-5));
}

TEST_CASE("mutual information basics") {
  CHECK(mutual_information({0, 0, 1, 1}, {7, 7, 7, 7}) == doctest::Approx(0.0));
  CHECK(mutual_information({0, 0, 1, 1}, {0, 0, 1, 1}) ==
        doctest::Approx(entropy({0, 0, 1, 1})));
  CHECK(mutual_information({0, 0, 1, 1}, {0, 1, 1, 1}) ==
        doctest::Approx(0.215762).epsilon(1e-5));
}

TEST_CASE("nmi basics") {
  CHECK(nmi({0, 0, 1, 1}, {0, 0, 1, 1}) == doctest::Approx(1.0));
  CHECK(nmi({0, 0, 1, 1}, {0, 1, 1, 1}) ==
        doctest::Approx(0.343711).epsilon(1e-5));
  // independent: one partition trivial
  CHECK(nmi({0, 0, 1, 1}, {3, 3, 3, 3}) == doctest::Approx(0.0));
  // both trivial: undefined
  CHECK(std::isnan(nmi({1, 1}, {2, 2})));
}

TEST_CASE("relabel invariance and symmetry") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> lab(0, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> a(120), b(120);
    for (auto& x : a) x = lab(rng);
    for (auto& x : b) x = lab(rng);
    std::vector<int> a2(a);
    for (auto& x : a2) x = 10 - x;  // permuted ids
    CHECK(rand_index(a, b) == doctest::Approx(rand_index(a2, b)));
    CHECK(nmi(a, b) == doctest::Approx(nmi(a2, b)));
    CHECK(rand_index(a, b) == doctest::Approx(rand_index(b, a)));
    CHECK(nmi(a, b) == doctest::Approx(nmi(b, a)));
    CHECK(rand_index(a, b) >= 0.0);
    CHECK(rand_index(a, b) <= 1.0);
    CHECK(nmi(a, b) >= 0.0);
    CHECK(nmi(a, b) <= 1.0);
  }
}

TEST_CASE("contingency-table RI equals the all-pairs RI") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 50 + trial * 25;
    std::uniform_int_distribution<int> lab(0, 3 + trial % 4);
    std::vector<int> a(n), b(n);
    for (auto& x : a) x = lab(rng);
    for (auto& x : b) x = lab(rng);
    CHECK(rand_index(a, b) == doctest::Approx(brute_rand_index(a, b)));
  }
}

TEST_CASE("string labels densify in first-appearance order") {
  const auto ids = dense_labels({"setosa", "virginica", "setosa", "versicolor"});
  CHECK(ids == std::vector<int>{0, 1, 0, 2});
}
