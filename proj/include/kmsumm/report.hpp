/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef KMSUMM_REPORT_HPP_
#define KMSUMM_REPORT_HPP_

#include <optional>
#include <string>

#include "kmsumm/distance.hpp"
#include "kmsumm/instance.hpp"

namespace kmsumm {

struct SolveCounters {
  long local_search_steps = 0;
  long perturbations = 0;
  long oracle_nodes = 0;
};

struct SolveReport {
  std::string instance_name;
  std::string method;  // ils | local | restart | exact
  MetricKind metric = MetricKind::kEuclidean;
  double budget_s = 0.0;
  double duration_used_s = 0.0;
  double td = 0.0;
  std::vector<std::string> selected_ids;  // in shot index order
  std::vector<int> selected_indices;
  SolveCounters counters;
  double wall_time_ms = 0.0;
  std::optional<double> optimality_percent;
  std::optional<bool> proved_optimal;
  std::optional<double> runtime_pct_of_video;
};

// Assembles a report and audits it: the objective is recomputed from the
// selected indices and must agree with `td` to within 1e-9 relative, else a
// std::logic_error flags the solver bug.
SolveReport make_report(const DistanceMatrix& dm, const Instance& instance,
                        const std::string& method, const Solution& solution, double td,
                        const SolveCounters& counters, double wall_time_ms);

// Fixed key order, two-space indent, trailing newline. Equal reports have
// equal bytes, so diffing runs is meaningful; only wall_time_ms (and
// runtime_pct_of_video, which derives from it) vary between identical runs.
std::string report_to_json(const SolveReport& report);

// One benchmark table line. Optional fields print as empty cells. A row with
// `error` set renders as <instance>,error,,,, with everything else blank.
struct BenchRow {
  std::string instance_name;
  std::string method;
  std::optional<double> td;
  std::optional<double> optimality_percent;
  std::optional<double> wall_time_ms;
  std::optional<double> runtime_pct_of_video;
  bool error = false;
};

std::string bench_csv_header();
std::string bench_row_csv(const BenchRow& row);

}  // namespace kmsumm

#endif  // KMSUMM_REPORT_HPP_
