/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "kmsumm/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kmsumm {

std::string to_string(MetricKind metric) {
  switch (metric) {
    case MetricKind::kEuclidean: return "euclidean";
    case MetricKind::kSquaredEuclidean: return "sqeuclidean";
    case MetricKind::kManhattan: return "manhattan";
  }
  throw std::logic_error("unknown MetricKind value");
}

MetricKind metric_from_string(const std::string& name) {
  if (name == "euclidean") return MetricKind::kEuclidean;
  if (name == "sqeuclidean") return MetricKind::kSquaredEuclidean;
  if (name == "manhattan") return MetricKind::kManhattan;
  throw ParseError("unknown metric '" + name + "' (expected euclidean, sqeuclidean or manhattan)");
}

double Instance::total_duration_s() const {
  double total = 0.0;
  for (const Shot& shot : shots) total += shot.duration_s;
  return total;
}

void validate_instance(const Instance& instance) {
  if (instance.shots.empty()) throw ValidationError("instance '" + instance.name + "' has no shots");
  if (!std::isfinite(instance.budget_s) || instance.budget_s <= 0.0)
    throw ValidationError("budget_seconds must be positive and finite");

  const int dim = static_cast<int>(instance.shots[0].features.size());
  if (dim < 1) throw ValidationError("shot '" + instance.shots[0].id + "' has an empty feature vector");

  double min_duration = std::numeric_limits<double>::infinity();
  for (const Shot& shot : instance.shots) {
    if (!std::isfinite(shot.duration_s) || shot.duration_s <= 0.0)
      throw ValidationError("shot '" + shot.id + "' has non-positive duration");
    if (static_cast<int>(shot.features.size()) != dim)
      throw ValidationError("shot '" + shot.id + "' has " + std::to_string(shot.features.size()) +
                            " features, expected " + std::to_string(dim));
    for (double v : shot.features) {
      if (!std::isfinite(v)) throw ValidationError("shot '" + shot.id + "' has a non-finite feature");
    }
    min_duration = std::min(min_duration, shot.duration_s);
  }
  if (min_duration > instance.budget_s)
    throw InfeasibleInstanceError("no shot fits the budget of " + std::to_string(instance.budget_s) +
                                  " seconds; shortest shot lasts " + std::to_string(min_duration));
}

double selection_duration_s(const Instance& instance, std::span<const int> selected_sorted) {
  double total = 0.0;
  for (int index : selected_sorted) total += instance.shots[index].duration_s;
  return total;
}

double duration_with_add(const Instance& instance, std::span<const int> selected_sorted, int added) {
  // Sum in ascending index order with `added` spliced into place, matching
  // what selection_duration_s would return for the grown set.
  double total = 0.0;
  bool placed = false;
  for (int index : selected_sorted) {
    if (!placed && added < index) {
      total += instance.shots[added].duration_s;
      placed = true;
    }
    total += instance.shots[index].duration_s;
  }
  if (!placed) total += instance.shots[added].duration_s;
  return total;
}

double duration_with_swap(const Instance& instance, std::span<const int> selected_sorted,
                          int removed, int added) {
  double total = 0.0;
  bool placed = false;
  for (int index : selected_sorted) {
    if (index == removed) continue;
    if (!placed && added < index) {
      total += instance.shots[added].duration_s;
      placed = true;
    }
    total += instance.shots[index].duration_s;
  }
  if (!placed) total += instance.shots[added].duration_s;
  return total;
}

Solution Solution::make(const Instance& instance, std::vector<int> indices) {
  if (indices.empty()) throw ValidationError("a solution must select at least one shot");
  std::sort(indices.begin(), indices.end());
  const int n = instance.size();
  int previous = -1;
  for (int index : indices) {
    if (index < 0 || index >= n)
      throw ValidationError("shot index " + std::to_string(index) + " out of range [0, " +
                            std::to_string(n) + ")");
    if (index == previous) throw ValidationError("duplicate shot index " + std::to_string(index));
    previous = index;
  }
  const double used = selection_duration_s(instance, indices);
  if (used > instance.budget_s)
    throw ValidationError("selection lasts " + std::to_string(used) + " s, over the budget of " +
                          std::to_string(instance.budget_s) + " s");
  Solution solution;
  solution.selected_ = std::move(indices);
  solution.duration_used_s_ = used;
  return solution;
}

bool Solution::contains(int shot_index) const {
  return std::binary_search(selected_.begin(), selected_.end(), shot_index);
}

double derive_budget_by_ratio(double total_video_s, double ratio) {
  if (!std::isfinite(total_video_s) || total_video_s <= 0.0)
    throw ValidationError("video duration must be positive");
  if (!std::isfinite(ratio) || ratio <= 0.0 || ratio >= 1.0)
    throw ValidationError("budget ratio must lie strictly between 0 and 1");
  return ratio * total_video_s;
}

double derive_budget_capped(double total_video_s, double cap_s, double ratio) {
  if (!std::isfinite(cap_s) || cap_s <= 0.0) throw ValidationError("budget cap must be positive");
  return std::min(cap_s, derive_budget_by_ratio(total_video_s, ratio));
}

}  // namespace kmsumm
