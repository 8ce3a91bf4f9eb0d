/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "kmsumm/ils.hpp"

#include <chrono>
#include <stdexcept>

namespace kmsumm {

Solution perturb(const Instance& instance, const Solution& solution, int strength) {
  if (strength < 1) throw std::invalid_argument("perturbation strength must be at least 1");
  const int n = instance.size();
  const int unselected = n - static_cast<int>(solution.selected().size());
  if (unselected < strength) return solution;

  std::vector<char> selected(n, 0);
  for (int index : solution.selected()) selected[index] = 1;

  for (int round = 0; round < strength; ++round) {
    // Shortest shot outside the selection; the ascending scan with a strict
    // comparison keeps the lowest index on duration ties.
    int added = -1;
    for (int j = 0; j < n; ++j) {
      if (selected[j]) continue;
      if (added < 0 || instance.shots[j].duration_s < instance.shots[added].duration_s) added = j;
    }
    if (added < 0) throw std::logic_error("perturb ran out of unselected shots");
    selected[added] = 1;

    // Longest selected shot other than the one that just entered.
    int dropped = -1;
    for (int j = 0; j < n; ++j) {
      if (!selected[j] || j == added) continue;
      if (dropped < 0 || instance.shots[j].duration_s > instance.shots[dropped].duration_s)
        dropped = j;
    }
    if (dropped < 0) throw std::logic_error("perturb has nothing to drop");
    selected[dropped] = 0;
  }

  std::vector<int> indices;
  for (int j = 0; j < n; ++j) {
    if (selected[j]) indices.push_back(j);
  }
  if (selection_duration_s(instance, indices) > instance.budget_s) return solution;
  return Solution::make(instance, std::move(indices));
}

IlsResult ils_summ(const DistanceMatrix& dm, const Instance& instance, const IlsParams& params) {
  if (params.m_max < 1) throw std::invalid_argument("m_max must be at least 1");
  const auto started = std::chrono::steady_clock::now();

  IlsTrace trace;
  LocalSearchOutcome base = local_search(dm, instance, init_solution(instance), params.local_search);
  trace.local_search_steps += base.steps_taken;

  Solution best = base.solution;
  double td_best = total_distance(dm, best);
  trace.initial_td = td_best;

  int strength = 1;
  while (strength <= params.m_max) {
    const Solution kicked = perturb(instance, best, strength);
    const LocalSearchOutcome outcome = local_search(dm, instance, kicked, params.local_search);
    const double td = total_distance(dm, outcome.solution);

    ++trace.perturbations;
    trace.local_search_steps += outcome.steps_taken;
    const bool accepted = td < td_best;
    trace.iterations.push_back({strength, td, accepted});

    if (accepted) {
      best = outcome.solution;
      td_best = td;
      strength = 1;
    } else {
      ++strength;
    }
  }

  trace.final_td = td_best;
  trace.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return {best, trace};
}

}  // namespace kmsumm
