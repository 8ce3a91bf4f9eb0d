/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef KMSUMM_ILS_HPP_
#define KMSUMM_ILS_HPP_

#include "kmsumm/local_search.hpp"

namespace kmsumm {

struct IlsParams {
  // Strongest perturbation tried before giving up on improving the incumbent.
  int m_max = 5;
  LocalSearchParams local_search;
};

struct IlsIteration {
  int strength = 0;           // perturbation strength used this round
  double td_after_search = 0.0;
  bool accepted = false;      // strictly better than the incumbent
};

struct IlsTrace {
  double initial_td = 0.0;  // objective after the initial descent
  double final_td = 0.0;
  std::vector<IlsIteration> iterations;
  long perturbations = 0;
  long local_search_steps = 0;  // includes the initial descent
  double wall_time_ms = 0.0;
};

struct IlsResult {
  Solution solution;
  IlsTrace trace;
};

// Deterministic kick: `strength` exchanges, each adding the shortest
// unselected shot and then dropping the longest selected one other than the
// shot just added (lowest index on duration ties). Returns the input solution
// unchanged when fewer than `strength` unselected shots exist or when the
// exchanged set would break the budget.
Solution perturb(const Instance& instance, const Solution& solution, int strength);

// Iterated local search: descend, then repeatedly kick the incumbent and
// descend again, accepting strict improvements only. The perturbation
// strength grows by one per rejection and resets to one per acceptance; the
// run stops when it would exceed m_max.
IlsResult ils_summ(const DistanceMatrix& dm, const Instance& instance, const IlsParams& params);

}  // namespace kmsumm

#endif  // KMSUMM_ILS_HPP_
