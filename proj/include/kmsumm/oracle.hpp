/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef KMSUMM_ORACLE_HPP_
#define KMSUMM_ORACLE_HPP_

#include <limits>
#include <utility>

#include "kmsumm/local_search.hpp"

namespace kmsumm {

struct OracleLimits {
  long max_nodes = 50'000'000;
  double max_seconds = std::numeric_limits<double>::infinity();
};

struct OracleResult {
  Solution solution;
  double td_optimal = 0.0;
  long nodes_explored = 0;
  // True when the search ran to completion; false when a limit cut it short,
  // in which case the solution is the best incumbent found.
  bool proved_optimal = false;
  // (nodes_explored, incumbent objective) at each improvement, in order.
  std::vector<std::pair<long, double>> incumbent_history;
};

// Depth-first branch and bound over include/exclude decisions, shots ordered
// by ascending duration. The bound at a node is the objective of serving
// every shot by its nearest not-yet-excluded shot, which no completion can
// beat. Single-threaded and deterministic; objective values use the same
// accumulation as total_distance, so a finished run reproduces enumeration
// bit for bit.
OracleResult exact_solve(const DistanceMatrix& dm, const Instance& instance,
                         const OracleLimits& limits = {});

// Checks every non-empty subset. Limited to 20 shots; beyond that it refuses
// rather than run for hours. Exists as the independent check on exact_solve.
OracleResult enumerate_solve(const DistanceMatrix& dm, const Instance& instance);

struct RestartOutcome {
  Solution solution;
  long total_steps = 0;     // local-search steps across all completed starts
  int starts_completed = 0;
};

// Local search restarted from every single-shot start in index order, best
// result wins (earliest start on ties). Stops early once wall time exceeds
// time_budget_s, but always finishes at least one start.
RestartOutcome restart_summ(const DistanceMatrix& dm, const Instance& instance,
                            const LocalSearchParams& params, double time_budget_s);

// 100 * td_optimal / td_achieved, the convention that makes 100 mean optimal.
// Both values zero counts as optimal; td_achieved below td_optimal is a
// caller bug and throws.
double optimality_percentage(double td_achieved, double td_optimal);

}  // namespace kmsumm

#endif  // KMSUMM_ORACLE_HPP_
