/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "kmsumm/objective.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace kmsumm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool in_selection(const NearestCache& cache, int shot) {
  return std::binary_search(cache.selected.begin(), cache.selected.end(), shot);
}

}  // namespace

NearestEntry recompute_nearest(const DistanceMatrix& dm, std::span<const int> selected_sorted,
                               int shot) {
  NearestEntry entry{kInf, -1, kInf, -1};
  for (int s : selected_sorted) {
    const double d = dm.at(shot, s);
    if (d < entry.d1) {
      entry.d2 = entry.d1;
      entry.nearest2 = entry.nearest1;
      entry.d1 = d;
      entry.nearest1 = s;
    } else if (d < entry.d2) {
      entry.d2 = d;
      entry.nearest2 = s;
    }
  }
  return entry;
}

NearestCache build_cache(const DistanceMatrix& dm, const Solution& solution) {
  const int n = dm.size();
  NearestCache cache;
  cache.selected = solution.selected();
  cache.d1.resize(n);
  cache.d2.resize(n);
  cache.nearest1.resize(n);
  cache.nearest2.resize(n);
  for (int i = 0; i < n; ++i) {
    const NearestEntry entry = recompute_nearest(dm, cache.selected, i);
    cache.d1[i] = entry.d1;
    cache.d2[i] = entry.d2;
    cache.nearest1[i] = entry.nearest1;
    cache.nearest2[i] = entry.nearest2;
  }
  return cache;
}

double total_distance(const DistanceMatrix& dm, std::span<const int> selected_sorted) {
  if (selected_sorted.empty()) throw std::invalid_argument("total_distance of an empty selection");
  const int n = dm.size();
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double* row = dm.row(i);
    double best = kInf;
    for (int s : selected_sorted) best = std::min(best, row[s]);
    acc += best;
  }
  return acc;
}

double total_distance(const DistanceMatrix& dm, const Solution& solution) {
  return total_distance(dm, std::span<const int>(solution.selected()));
}

double delta_add(const DistanceMatrix& dm, const NearestCache& cache, int candidate) {
  if (in_selection(cache, candidate))
    throw std::invalid_argument("delta_add: shot " + std::to_string(candidate) +
                                " is already selected");
  const int n = dm.size();
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += std::min(0.0, dm.at(i, candidate) - cache.d1[i]);
  return acc;
}

double delta_swap(const DistanceMatrix& dm, const NearestCache& cache, int removed, int added) {
  if (!in_selection(cache, removed))
    throw std::invalid_argument("delta_swap: shot " + std::to_string(removed) + " is not selected");
  if (in_selection(cache, added))
    throw std::invalid_argument("delta_swap: shot " + std::to_string(added) +
                                " is already selected");
  const int n = dm.size();
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double base = cache.nearest1[i] == removed ? cache.d2[i] : cache.d1[i];
    acc += std::min(dm.at(i, added), base) - cache.d1[i];
  }
  return acc;
}

}  // namespace kmsumm
