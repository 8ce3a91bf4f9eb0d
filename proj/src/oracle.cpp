/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "kmsumm/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace kmsumm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Clock = std::chrono::steady_clock;

double elapsed_s(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct AvailEntry {
  int shot;
  double a1, a2;
  int o1, o2;
};

// Search state for exact_solve. `available` tracks shots not yet excluded on
// the current path; a1/a2 hold each shot's nearest and second-nearest
// available distances. Distances stored here are matrix entries picked by
// comparisons, never arithmetic results, so bounds summed from them are exact.
struct BnbState {
  const DistanceMatrix* dm;
  const Instance* instance;
  std::vector<int> order;
  std::vector<char> available;
  std::vector<double> a1, a2;
  std::vector<int> o1, o2;
  std::vector<int> included;  // sorted by shot index

  double incumbent_td = kInf;
  std::vector<int> incumbent;
  std::vector<std::pair<long, double>> history;

  long nodes = 0;
  long max_nodes = 0;
  double max_seconds = kInf;
  Clock::time_point started;
  bool hit_limit = false;
};

void rescan_available(const BnbState& s, int i, double& a1, double& a2, int& o1, int& o2) {
  a1 = kInf;
  a2 = kInf;
  o1 = -1;
  o2 = -1;
  const double* row = s.dm->row(i);
  const int n = s.dm->size();
  for (int j = 0; j < n; ++j) {
    if (!s.available[j]) continue;
    const double d = row[j];
    if (d < a1) {
      a2 = a1;
      o2 = o1;
      a1 = d;
      o1 = j;
    } else if (d < a2) {
      a2 = d;
      o2 = j;
    }
  }
}

bool visit(BnbState& s, int depth) {
  ++s.nodes;
  if (!s.incumbent.empty()) {
    if (s.nodes > s.max_nodes ||
        ((s.nodes & 1023) == 0 && elapsed_s(s.started) > s.max_seconds)) {
      s.hit_limit = true;
      return false;
    }
  }

  const int n = s.dm->size();
  double bound = 0.0;
  for (int i = 0; i < n; ++i) bound += s.a1[i];
  if (bound >= s.incumbent_td) return true;

  if (depth == n) {
    if (s.included.empty()) return true;
    const double td = total_distance(*s.dm, std::span<const int>(s.included));
    if (td < s.incumbent_td) {
      s.incumbent_td = td;
      s.incumbent = s.included;
      s.history.emplace_back(s.nodes, td);
    }
    return true;
  }

  const int shot = s.order[depth];

  if (duration_with_add(*s.instance, s.included, shot) <= s.instance->budget_s) {
    s.included.insert(std::lower_bound(s.included.begin(), s.included.end(), shot), shot);
    const bool keep_going = visit(s, depth + 1);
    s.included.erase(std::find(s.included.begin(), s.included.end(), shot));
    if (!keep_going) return false;
  }

  // Exclude branch: the shot leaves the available set, which can only raise
  // nearest distances for shots it was serving. Undo on backtrack.
  s.available[shot] = 0;
  std::vector<AvailEntry> undo;
  for (int i = 0; i < n; ++i) {
    if (s.o1[i] != shot && s.o2[i] != shot) continue;
    undo.push_back({i, s.a1[i], s.a2[i], s.o1[i], s.o2[i]});
    rescan_available(s, i, s.a1[i], s.a2[i], s.o1[i], s.o2[i]);
  }
  const bool keep_going = visit(s, depth + 1);
  for (const AvailEntry& e : undo) {
    s.a1[e.shot] = e.a1;
    s.a2[e.shot] = e.a2;
    s.o1[e.shot] = e.o1;
    s.o2[e.shot] = e.o2;
  }
  s.available[shot] = 1;
  return keep_going;
}

}  // namespace

OracleResult exact_solve(const DistanceMatrix& dm, const Instance& instance,
                         const OracleLimits& limits) {
  if (limits.max_nodes < 1) throw std::invalid_argument("max_nodes must be at least 1");
  const int n = instance.size();

  BnbState s;
  s.dm = &dm;
  s.instance = &instance;
  s.max_nodes = limits.max_nodes;
  s.max_seconds = limits.max_seconds;
  s.started = Clock::now();

  // Branch on short shots first: they are the ones most subsets can afford,
  // so the greedy leftmost path yields a feasible incumbent immediately.
  s.order.resize(n);
  for (int i = 0; i < n; ++i) s.order[i] = i;
  std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    return instance.shots[a].duration_s < instance.shots[b].duration_s;
  });

  s.available.assign(n, 1);
  s.a1.resize(n);
  s.a2.resize(n);
  s.o1.resize(n);
  s.o2.resize(n);
  for (int i = 0; i < n; ++i) rescan_available(s, i, s.a1[i], s.a2[i], s.o1[i], s.o2[i]);

  visit(s, 0);

  OracleResult result{Solution::make(instance, s.incumbent), s.incumbent_td, s.nodes,
                      !s.hit_limit, std::move(s.history)};
  return result;
}

OracleResult enumerate_solve(const DistanceMatrix& dm, const Instance& instance) {
  const int n = instance.size();
  if (n > 20)
    throw std::invalid_argument("enumerate_solve handles at most 20 shots, got " +
                                std::to_string(n));

  double best_td = kInf;
  std::vector<int> best;
  long visited = 0;
  std::vector<std::pair<long, double>> history;

  std::vector<int> indices;
  const unsigned long subsets = 1UL << n;
  for (unsigned long mask = 1; mask < subsets; ++mask) {
    ++visited;
    indices.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (1UL << i)) indices.push_back(i);
    }
    if (selection_duration_s(instance, indices) > instance.budget_s) continue;
    const double td = total_distance(dm, std::span<const int>(indices));
    if (td < best_td) {
      best_td = td;
      best = indices;
      history.emplace_back(visited, td);
    }
  }

  return {Solution::make(instance, std::move(best)), best_td, visited, true, std::move(history)};
}

RestartOutcome restart_summ(const DistanceMatrix& dm, const Instance& instance,
                            const LocalSearchParams& params, double time_budget_s) {
  if (std::isnan(time_budget_s) || time_budget_s <= 0.0)
    throw std::invalid_argument("time budget must be positive");
  const auto started = Clock::now();
  const int n = instance.size();

  bool have_result = false;
  Solution best = init_solution(instance);  // placeholder until a start completes
  double td_best = kInf;
  long total_steps = 0;
  int starts_completed = 0;

  for (int start = 0; start < n; ++start) {
    if (have_result && elapsed_s(started) > time_budget_s) break;
    if (instance.shots[start].duration_s > instance.budget_s) continue;

    const LocalSearchOutcome outcome =
        local_search(dm, instance, Solution::make(instance, {start}), params);
    ++starts_completed;
    total_steps += outcome.steps_taken;
    const double td = total_distance(dm, outcome.solution);
    if (!have_result || td < td_best) {
      best = outcome.solution;
      td_best = td;
      have_result = true;
    }
  }

  return {std::move(best), total_steps, starts_completed};
}

double optimality_percentage(double td_achieved, double td_optimal) {
  if (std::isnan(td_achieved) || std::isnan(td_optimal) || td_achieved < 0.0 || td_optimal < 0.0)
    throw std::invalid_argument("objective values must be non-negative");
  if (td_achieved < td_optimal)
    throw std::invalid_argument("achieved objective beats the reported optimum");
  if (td_achieved == 0.0) return 100.0;
  return 100.0 * td_optimal / td_achieved;
}

}  // namespace kmsumm
