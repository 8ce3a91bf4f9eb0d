// Instance model and file formats.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "kmsumm/instance_io.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace kmsumm;

namespace {

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path path = fs::temp_directory_path() / ("kmsumm_test_" + name);
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

constexpr const char* kMicroJson = R"({
  "name": "micro4",
  "budget_seconds": 5.0,
  "shots": [
    {"id": "s0", "duration_seconds": 2.0, "features": [0.0]},
    {"id": "s1", "duration_seconds": 3.0, "features": [1.0]},
    {"id": "s2", "duration_seconds": 2.0, "features": [4.0]},
    {"id": "s3", "duration_seconds": 3.0, "features": [5.0]}
  ]
})";

}  // namespace

TEST_CASE("json instance loads with file order preserved") {
  const fs::path path = write_temp("micro.json", kMicroJson);
  const Instance instance = load_instance(path.string());
  CHECK(instance.name == "micro4");
  CHECK(instance.size() == 4);
  CHECK(instance.feature_dim() == 1);
  CHECK(instance.budget_s == 5.0);
  CHECK(instance.metric == MetricKind::kEuclidean);
  CHECK(instance.shots[0].id == "s0");
  CHECK(instance.shots[3].id == "s3");
  CHECK(instance.shots[2].features[0] == 4.0);
  CHECK(instance.total_duration_s() == 10.0);
}

TEST_CASE("metric field is honored") {
  const fs::path path = write_temp("metric.json", R"({
    "name": "m", "budget_seconds": 2, "metric": "sqeuclidean",
    "shots": [{"id": "a", "duration_seconds": 1, "features": [0, 1]}]
  })");
  CHECK(load_instance(path.string()).metric == MetricKind::kSquaredEuclidean);
  CHECK(metric_from_string("manhattan") == MetricKind::kManhattan);
  CHECK(to_string(MetricKind::kSquaredEuclidean) == "sqeuclidean");
  CHECK_THROWS_AS(metric_from_string("cosine"), ParseError);
}

TEST_CASE("mixed feature dimensions are rejected") {
  const fs::path path = write_temp("dims.json", R"({
    "name": "d", "budget_seconds": 9,
    "shots": [
      {"id": "a", "duration_seconds": 1, "features": [0, 1, 2]},
      {"id": "b", "duration_seconds": 1, "features": [0, 1, 2, 3]}
    ]
  })");
  CHECK_THROWS_AS(load_instance(path.string()), ValidationError);
}

TEST_CASE("budget below every duration is infeasible") {
  const fs::path path = write_temp("infeasible.json", R"({
    "name": "i", "budget_seconds": 1.0,
    "shots": [
      {"id": "a", "duration_seconds": 2.0, "features": [0]},
      {"id": "b", "duration_seconds": 3.0, "features": [1]}
    ]
  })");
  CHECK_THROWS_AS(load_instance(path.string()), InfeasibleInstanceError);
}

TEST_CASE("budget equal to the shortest duration is feasible") {
  const fs::path path = write_temp("boundary.json", R"({
    "name": "b", "budget_seconds": 2.0,
    "shots": [
      {"id": "a", "duration_seconds": 2.0, "features": [0]},
      {"id": "b", "duration_seconds": 3.0, "features": [1]}
    ]
  })");
  CHECK(load_instance(path.string()).budget_s == 2.0);
}

TEST_CASE("bad inputs raise parse or validation errors") {
  CHECK_THROWS_AS(load_instance("/nonexistent/path.json"), ParseError);
  CHECK_THROWS_AS(load_instance(write_temp("garbage.json", "not json at all").string()),
                  ParseError);
  CHECK_THROWS_AS(load_instance(write_temp("nofields.json", R"({"name": "x"})").string()),
                  ParseError);
  CHECK_THROWS_AS(
      load_instance(write_temp("noshots.json",
                               R"({"name": "x", "budget_seconds": 1, "shots": []})")
                        .string()),
      ValidationError);
  CHECK_THROWS_AS(
      load_instance(
          write_temp("badduration.json",
                     R"({"name": "x", "budget_seconds": 1,
                         "shots": [{"id": "a", "duration_seconds": 0, "features": [1]}]})")
              .string()),
      ValidationError);
  CHECK_THROWS_AS(
      load_instance(
          write_temp("nofeatures.json",
                     R"({"name": "x", "budget_seconds": 1,
                         "shots": [{"id": "a", "duration_seconds": 1, "features": []}]})")
              .string()),
      ValidationError);
}

TEST_CASE("single shot instances are legal") {
  const fs::path path = write_temp("single.json", R"({
    "name": "s", "budget_seconds": 1,
    "shots": [{"id": "only", "duration_seconds": 1, "features": [0.5]}]
  })");
  const Instance instance = load_instance(path.string());
  CHECK(instance.size() == 1);
  const Solution solution = Solution::make(instance, {0});
  CHECK(solution.duration_used_s() == 1.0);
}

TEST_CASE("budget derivation") {
  CHECK(derive_budget_by_ratio(600.0, 0.15) == 90.0);
  CHECK(derive_budget_capped(5400.0, 240.0, 0.10) == 240.0);
  CHECK(derive_budget_capped(1000.0, 240.0, 0.10) == doctest::Approx(100.0).epsilon(1e-15));
  CHECK_THROWS_AS(derive_budget_by_ratio(0.0, 0.5), ValidationError);
  CHECK_THROWS_AS(derive_budget_by_ratio(100.0, 0.0), ValidationError);
  CHECK_THROWS_AS(derive_budget_by_ratio(100.0, 1.0), ValidationError);
  CHECK_THROWS_AS(derive_budget_capped(100.0, -3.0, 0.5), ValidationError);
}

TEST_CASE("save then load reproduces every number bit for bit") {
  SynthParams params;
  params.shot_count = 23;
  params.feature_dim = 7;
  params.seed = 99;
  params.metric = MetricKind::kManhattan;
  const Instance original = make_random_instance(params);

  const fs::path path = fs::temp_directory_path() / "kmsumm_test_roundtrip.json";
  save_instance(original, path.string());
  const Instance loaded = load_instance(path.string());

  CHECK(loaded.name == original.name);
  CHECK(loaded.metric == original.metric);
  CHECK(loaded.budget_s == original.budget_s);
  REQUIRE(loaded.size() == original.size());
  for (int i = 0; i < original.size(); ++i) {
    CHECK(loaded.shots[i].id == original.shots[i].id);
    CHECK(loaded.shots[i].duration_s == original.shots[i].duration_s);
    REQUIRE(loaded.shots[i].features == original.shots[i].features);
  }
}

TEST_CASE("csv instances need a caller-provided budget") {
  const fs::path path = write_temp("shots.csv",
                                   "a,2.0,0.0,0.0\n"
                                   "b,3.0,1.0,0.5\n"
                                   "c,2.0,4.0,1.0\n");
  const Instance instance = load_instance_csv(path.string(), "csvcase", 5.0);
  CHECK(instance.name == "csvcase");
  CHECK(instance.size() == 3);
  CHECK(instance.feature_dim() == 2);
  CHECK(instance.shots[1].features[1] == 0.5);

  const Instance via_any = load_instance_any(path.string(), 5.0);
  CHECK(via_any.name == "kmsumm_test_shots");  // file stem, write_temp prefixes the name

  CHECK_THROWS_AS(load_instance_csv(write_temp("short.csv", "a,2.0\n").string(), "x", 5.0),
                  ParseError);
  CHECK_THROWS_AS(
      load_instance_csv(write_temp("nonnum.csv", "a,two,0.0\n").string(), "x", 5.0), ParseError);
}

TEST_CASE("solution factory enforces the budget invariant") {
  const Instance instance = test_support::micro4();
  const Solution solution = Solution::make(instance, {2, 0});
  CHECK(solution.selected() == std::vector<int>{0, 2});  // sorted
  CHECK(solution.duration_used_s() == 4.0);
  CHECK(solution.contains(2));
  CHECK_FALSE(solution.contains(1));

  CHECK_THROWS_AS(Solution::make(instance, {}), ValidationError);
  CHECK_THROWS_AS(Solution::make(instance, {0, 0}), ValidationError);
  CHECK_THROWS_AS(Solution::make(instance, {4}), ValidationError);
  CHECK_THROWS_AS(Solution::make(instance, {-1}), ValidationError);
  CHECK_THROWS_AS(Solution::make(instance, {1, 3}), ValidationError);  // 6 s over a 5 s budget
}

TEST_CASE("duration helpers agree with a plain resum") {
  std::mt19937_64 rng(7);
  SynthParams params;
  params.shot_count = 30;
  params.feature_dim = 3;
  params.seed = 11;
  const Instance instance = make_random_instance(params);
  for (int round = 0; round < 200; ++round) {
    const std::vector<int> picked = test_support::random_feasible_selection(instance, rng);
    const double base = selection_duration_s(instance, picked);
    CHECK(base == doctest::Approx(test_support::naive_duration(instance, picked)).epsilon(1e-12));

    // grow by one unselected shot
    int extra = -1;
    for (int i = 0; i < instance.size(); ++i) {
      if (!std::binary_search(picked.begin(), picked.end(), i)) {
        extra = i;
        break;
      }
    }
    if (extra < 0) continue;
    std::vector<int> grown = picked;
    grown.insert(std::lower_bound(grown.begin(), grown.end(), extra), extra);
    CHECK(duration_with_add(instance, picked, extra) == selection_duration_s(instance, grown));

    std::vector<int> swapped = grown;
    swapped.erase(std::find(swapped.begin(), swapped.end(), picked[0]));
    CHECK(duration_with_swap(instance, picked, picked[0], extra) ==
          selection_duration_s(instance, swapped));
  }
}
