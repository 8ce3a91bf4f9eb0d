/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "kmsumm/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "kmsumm/objective.hpp"

namespace kmsumm {

SolveReport make_report(const DistanceMatrix& dm, const Instance& instance,
                        const std::string& method, const Solution& solution, double td,
                        const SolveCounters& counters, double wall_time_ms) {
  const double audited = total_distance(dm, solution);
  const double tolerance = 1e-9 * std::max({1.0, std::fabs(audited), std::fabs(td)});
  if (std::fabs(audited - td) > tolerance)
    throw std::logic_error("report audit failed: solver objective " + std::to_string(td) +
                           " vs recomputed " + std::to_string(audited));

  SolveReport report;
  report.instance_name = instance.name;
  report.method = method;
  report.metric = instance.metric;
  report.budget_s = instance.budget_s;
  report.duration_used_s = solution.duration_used_s();
  report.td = td;
  for (int index : solution.selected()) {
    report.selected_indices.push_back(index);
    report.selected_ids.push_back(instance.shots[index].id);
  }
  report.counters = counters;
  report.wall_time_ms = wall_time_ms;
  return report;
}

std::string report_to_json(const SolveReport& report) {
  nlohmann::ordered_json root;
  root["instance"] = report.instance_name;
  root["method"] = report.method;
  root["metric"] = to_string(report.metric);
  root["budget_seconds"] = report.budget_s;
  root["duration_used_seconds"] = report.duration_used_s;
  root["total_distance"] = report.td;
  root["selected_ids"] = report.selected_ids;
  root["selected_indices"] = report.selected_indices;
  root["counters"] = {{"local_search_steps", report.counters.local_search_steps},
                      {"perturbations", report.counters.perturbations},
                      {"oracle_nodes", report.counters.oracle_nodes}};
  root["wall_time_ms"] = report.wall_time_ms;
  if (report.optimality_percent) root["optimality_percent"] = *report.optimality_percent;
  if (report.proved_optimal) root["proved_optimal"] = *report.proved_optimal;
  if (report.runtime_pct_of_video) root["runtime_pct_of_video"] = *report.runtime_pct_of_video;
  return root.dump(2) + "\n";
}

namespace {

std::string cell(const std::optional<double>& value) {
  if (!value) return "";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", *value);
  return buffer;
}

}  // namespace

std::string bench_csv_header() {
  return "instance,method,td,optimality_percent,wall_time_ms,runtime_pct_of_video";
}

std::string bench_row_csv(const BenchRow& row) {
  if (row.error) return row.instance_name + ",error,,,,";
  return row.instance_name + "," + row.method + "," + cell(row.td) + "," +
         cell(row.optimality_percent) + "," + cell(row.wall_time_ms) + "," +
         cell(row.runtime_pct_of_video);
}

}  // namespace kmsumm
