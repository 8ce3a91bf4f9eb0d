/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef KMSUMM_INSTANCE_HPP_
#define KMSUMM_INSTANCE_HPP_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kmsumm {

// Input file cannot be read or does not match the expected syntax/schema.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parsed data violates a domain invariant (dimensions, signs, budget).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No single shot fits the budget: the instance has no feasible solution.
struct InfeasibleInstanceError : ValidationError {
  using ValidationError::ValidationError;
};

enum class MetricKind { kEuclidean, kSquaredEuclidean, kManhattan };

std::string to_string(MetricKind metric);
MetricKind metric_from_string(const std::string& name);

struct Shot {
  std::string id;
  double duration_s = 0.0;
  std::vector<double> features;
};

struct Instance {
  std::string name;
  std::vector<Shot> shots;
  double budget_s = 0.0;
  MetricKind metric = MetricKind::kEuclidean;

  int size() const { return static_cast<int>(shots.size()); }
  int feature_dim() const { return shots.empty() ? 0 : static_cast<int>(shots[0].features.size()); }

  // Total duration of all shots, summed in index order. For instances built
  // from a real video this equals the video length.
  double total_duration_s() const;
};

// Checks every instance invariant; throws ValidationError or
// InfeasibleInstanceError. Called by all loaders and builders.
void validate_instance(const Instance& instance);

// Canonical duration of a selection: the sum of durations in ascending index
// order. Every feasibility comparison in the project uses this one
// definition, so a set deemed feasible in one place is feasible everywhere.
double selection_duration_s(const Instance& instance, std::span<const int> selected_sorted);
double duration_with_add(const Instance& instance, std::span<const int> selected_sorted, int added);
double duration_with_swap(const Instance& instance, std::span<const int> selected_sorted,
                          int removed, int added);

// A feasible subset of shot indices. Instances of this class always satisfy
// the budget constraint; the factory rejects anything else.
class Solution {
 public:
  static Solution make(const Instance& instance, std::vector<int> indices);

  const std::vector<int>& selected() const { return selected_; }
  double duration_used_s() const { return duration_used_s_; }
  bool contains(int shot_index) const;

 private:
  Solution() = default;
  std::vector<int> selected_;  // sorted ascending, duplicate-free
  double duration_used_s_ = 0.0;
};

// Summary-duration budget rules. Ratio mode returns ratio * total; the capped
// variant returns min(cap_s, ratio * total).
double derive_budget_by_ratio(double total_video_s, double ratio);
double derive_budget_capped(double total_video_s, double cap_s, double ratio);

}  // namespace kmsumm

#endif  // KMSUMM_INSTANCE_HPP_
