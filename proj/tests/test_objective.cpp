// Objective evaluation: metric, total distance, nearest cache, move deltas.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kmsumm/objective.hpp"
#include "test_support.hpp"

using namespace kmsumm;

namespace {

double relative_gap(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("metric examples on [3,4] vs [0,0]") {
  const std::vector<double> a = {3.0, 4.0};
  const std::vector<double> b = {0.0, 0.0};
  CHECK(metric_distance(a, b, MetricKind::kEuclidean) == 5.0);
  CHECK(metric_distance(a, b, MetricKind::kSquaredEuclidean) == 25.0);
  CHECK(metric_distance(a, b, MetricKind::kManhattan) == 7.0);
  CHECK(metric_distance(a, a, MetricKind::kEuclidean) == 0.0);
}

TEST_CASE("micro instance total distances are integer exact") {
  const Instance instance = test_support::micro4();
  const DistanceMatrix dm = build_distance_matrix(instance);

  const auto td = [&](std::vector<int> sel) { return total_distance(dm, sel); };
  CHECK(td({0}) == 10.0);
  CHECK(td({1}) == 8.0);
  CHECK(td({2}) == 8.0);
  CHECK(td({3}) == 10.0);
  CHECK(td({0, 1}) == 7.0);
  CHECK(td({0, 2}) == 2.0);
  CHECK(td({0, 3}) == 2.0);
  CHECK(td({1, 2}) == 2.0);
  CHECK(td({2, 3}) == 7.0);
  CHECK(td({0, 1, 2, 3}) == 0.0);
  CHECK_THROWS_AS(td({}), std::invalid_argument);
}

TEST_CASE("micro instance deltas") {
  const Instance instance = test_support::micro4();
  const DistanceMatrix dm = build_distance_matrix(instance);

  const NearestCache from0 = build_cache(dm, Solution::make(instance, {0}));
  CHECK(delta_add(dm, from0, 1) == -3.0);
  CHECK(delta_add(dm, from0, 2) == -8.0);
  CHECK(delta_add(dm, from0, 3) == -8.0);
  CHECK_THROWS_AS(delta_add(dm, from0, 0), std::invalid_argument);

  const NearestCache from02 = build_cache(dm, Solution::make(instance, {0, 2}));
  CHECK(delta_add(dm, from02, 1) == -1.0);
  CHECK(delta_swap(dm, from02, 2, 3) == 0.0);   // td {0,3} - td {0,2}
  CHECK(delta_swap(dm, from02, 0, 1) == 0.0);   // td {1,2} - td {0,2}
  CHECK(delta_swap(dm, from0, 0, 2) == -2.0);   // td {2} - td {0}
  CHECK_THROWS_AS(delta_swap(dm, from02, 1, 3), std::invalid_argument);  // 1 not selected
  CHECK_THROWS_AS(delta_swap(dm, from02, 0, 2), std::invalid_argument);  // 2 already selected
}

TEST_CASE("cache fields for a one-element selection") {
  const Instance instance = test_support::micro4();
  const DistanceMatrix dm = build_distance_matrix(instance);
  const NearestCache cache = build_cache(dm, Solution::make(instance, {1}));
  for (int i = 0; i < 4; ++i) {
    CHECK(cache.nearest1[i] == 1);
    CHECK(cache.d1[i] == dm.at(i, 1));
    CHECK(cache.nearest2[i] == -1);
    CHECK(std::isinf(cache.d2[i]));
  }
}

TEST_CASE("nearest ties resolve to the lowest index") {
  // shots 0 and 2 are equidistant from shot 1 (distance 2 each)
  Instance instance;
  instance.name = "ties";
  instance.budget_s = 10.0;
  instance.shots = {{"a", 1.0, {0.0}}, {"b", 1.0, {2.0}}, {"c", 1.0, {4.0}}};
  validate_instance(instance);
  const DistanceMatrix dm = build_distance_matrix(instance);
  const NearestEntry entry = recompute_nearest(dm, std::vector<int>{0, 2}, 1);
  CHECK(entry.nearest1 == 0);
  CHECK(entry.d1 == 2.0);
  CHECK(entry.nearest2 == 2);
  CHECK(entry.d2 == 2.0);
}

TEST_CASE("total distance matches the naive oracle and the cache sum") {
  std::mt19937_64 rng(31);
  for (unsigned seed = 0; seed < 30; ++seed) {
    const Instance instance = test_support::family_instance(seed);
    const DistanceMatrix dm = build_distance_matrix(instance);
    for (int round = 0; round < 10; ++round) {
      const std::vector<int> sel = test_support::random_feasible_selection(instance, rng);
      const double fast = total_distance(dm, sel);
      const double naive = test_support::naive_total_distance(instance, sel);
      CHECK(relative_gap(fast, naive) <= 1e-12);

      const NearestCache cache = build_cache(dm, Solution::make(instance, sel));
      double cache_sum = 0.0;
      for (int i = 0; i < instance.size(); ++i) cache_sum += cache.d1[i];
      CHECK(relative_gap(fast, cache_sum) <= 1e-12);
    }
  }
}

TEST_CASE("deltas agree with recomputing from scratch") {
  std::mt19937_64 rng(47);
  int add_checked = 0;
  int swap_checked = 0;
  for (unsigned seed = 100; seed < 140; ++seed) {
    const Instance instance = test_support::family_instance(seed);
    const DistanceMatrix dm = build_distance_matrix(instance);
    for (int round = 0; round < 25; ++round) {
      const std::vector<int> sel = test_support::random_feasible_selection(instance, rng);
      const NearestCache cache = build_cache(dm, Solution::make(instance, sel));
      const double before = total_distance(dm, sel);

      std::vector<int> outside;
      for (int i = 0; i < instance.size(); ++i)
        if (!std::binary_search(sel.begin(), sel.end(), i)) outside.push_back(i);
      if (outside.empty()) continue;

      const int added = outside[rng() % outside.size()];
      std::vector<int> grown = sel;
      grown.insert(std::lower_bound(grown.begin(), grown.end(), added), added);
      const double add_delta = delta_add(dm, cache, added);
      CHECK(add_delta <= 0.0);
      CHECK(relative_gap(before + add_delta, total_distance(dm, grown)) <= 1e-9);
      ++add_checked;

      const int removed = sel[rng() % sel.size()];
      std::vector<int> swapped = grown;
      swapped.erase(std::find(swapped.begin(), swapped.end(), removed));
      const double swap_delta = delta_swap(dm, cache, removed, added);
      CHECK(relative_gap(before + swap_delta, total_distance(dm, swapped)) <= 1e-9);
      ++swap_checked;
    }
  }
  CHECK(add_checked >= 900);
  CHECK(swap_checked >= 900);
}
