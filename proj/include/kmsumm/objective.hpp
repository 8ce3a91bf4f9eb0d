/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef KMSUMM_OBJECTIVE_HPP_
#define KMSUMM_OBJECTIVE_HPP_

#include <span>
#include <vector>

#include "kmsumm/distance.hpp"
#include "kmsumm/instance.hpp"

namespace kmsumm {

// Nearest and second-nearest selected shot per shot. d2 is +inf and nearest2
// is -1 while only one shot is selected. Keeping both distances makes swap
// deltas computable without rescanning the selection.
struct NearestCache {
  std::vector<int> selected;  // sorted copy of the selection this cache describes
  std::vector<double> d1;
  std::vector<double> d2;
  std::vector<int> nearest1;
  std::vector<int> nearest2;
};

struct NearestEntry {
  double d1;
  int nearest1;
  double d2;
  int nearest2;
};

// Nearest pair for one shot, scanning the selection in ascending order so
// exact distance ties resolve to the lowest index.
NearestEntry recompute_nearest(const DistanceMatrix& dm, std::span<const int> selected_sorted,
                               int shot);

NearestCache build_cache(const DistanceMatrix& dm, const Solution& solution);

// Objective value: sum over all shots of the distance to the nearest selected
// shot, accumulated in ascending shot order. This fixed order makes the value
// reproducible no matter which solver produced the selection.
double total_distance(const DistanceMatrix& dm, std::span<const int> selected_sorted);
double total_distance(const DistanceMatrix& dm, const Solution& solution);

// Objective change from adding `candidate` to the cached selection. Never
// positive. Throws std::invalid_argument if the candidate is already selected.
double delta_add(const DistanceMatrix& dm, const NearestCache& cache, int candidate);

// Objective change from swapping selected shot `removed` for unselected shot
// `added`. Throws std::invalid_argument when membership is the wrong way round.
double delta_swap(const DistanceMatrix& dm, const NearestCache& cache, int removed, int added);

}  // namespace kmsumm

#endif  // KMSUMM_OBJECTIVE_HPP_
