/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef KMSUMM_LOCAL_SEARCH_HPP_
#define KMSUMM_LOCAL_SEARCH_HPP_

#include <optional>

#include "kmsumm/kernels.hpp"
#include "kmsumm/objective.hpp"

namespace kmsumm {

struct LocalSearchParams {
  int max_trials = 10000;
  // Consider swaps only when no add fits the budget. This mirrors how a
  // summary is grown: fill the budget first, then rearrange.
  bool add_first = true;
};

struct LocalSearchOutcome {
  Solution solution;
  int steps_taken = 0;
  // True when the search stopped because no feasible move improved the
  // objective; false when it ran out of trials first.
  bool converged = false;
};

// Steepest-descent start: the single shortest shot, lowest index on ties.
Solution init_solution(const Instance& instance);

// Reference scan over the add/swap neighborhood of `solution`, built on fresh
// delta_add/delta_swap evaluations. Returns the best strictly improving
// feasible move under the kernels::better order, or nullopt at a local
// minimum. The solver proper uses the incremental SearchState path below;
// tests hold the two against each other.
std::optional<kernels::ScoredMove> best_neighbor(const DistanceMatrix& dm,
                                                 const Instance& instance,
                                                 const Solution& solution, bool add_first);

// Steepest descent over add/swap moves from `start`. Each accepted move must
// strictly decrease the objective as recomputed from scratch, so the reported
// solution never depends on incremental bookkeeping noise.
LocalSearchOutcome local_search(const DistanceMatrix& dm, const Instance& instance,
                                const Solution& start, const LocalSearchParams& params);

// Mutable solver state: the selection plus the nearest/second-nearest cache
// and per-shot add gains, all maintained incrementally as shots enter and
// leave. Exposed for the kernel tests and the benchmark tool.
class SearchState {
 public:
  SearchState(const DistanceMatrix& dm, const Instance& instance, const Solution& start);

  void facility_add(int shot);
  void facility_remove(int shot);

  const std::vector<int>& selected() const { return selected_; }
  double duration_used_s() const { return duration_used_s_; }
  const NearestCache& cache() const { return cache_; }
  const std::vector<double>& add_gains() const { return add_gains_; }
  bool is_selected(int shot) const { return position_in_selected_[shot] >= 0; }

  Solution to_solution() const;
  kernels::SwapScanInput swap_scan_input() const;

 private:
  void reindex_selection();

  const DistanceMatrix* dm_;
  const Instance* instance_;
  std::vector<int> selected_;              // sorted ascending
  std::vector<int> position_in_selected_;  // per shot; -1 when unselected
  double duration_used_s_ = 0.0;
  NearestCache cache_;
  std::vector<double> add_gains_;
  std::vector<kernels::GainUpdate> updates_;  // scratch, reused between moves
};

}  // namespace kmsumm

#endif  // KMSUMM_LOCAL_SEARCH_HPP_
