/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef KMSUMM_INSTANCE_IO_HPP_
#define KMSUMM_INSTANCE_IO_HPP_

#include <string>

#include "kmsumm/instance.hpp"

namespace kmsumm {

// Reads a JSON instance file:
//   { "name": ..., "budget_seconds": ..., "metric": "euclidean",
//     "shots": [ { "id": ..., "duration_seconds": ..., "features": [...] }, ... ] }
// The metric field is optional and defaults to euclidean. The result is fully
// validated; shots keep their file order as indices 0..N-1.
Instance load_instance(const std::string& path);

// Reads a headerless CSV with one shot per line: id,duration_seconds,f0,f1,...
// The file carries no budget, so the caller must supply one.
Instance load_instance_csv(const std::string& path, const std::string& name, double budget_s,
                           MetricKind metric = MetricKind::kEuclidean);

// Picks load_instance_csv for *.csv paths and load_instance otherwise.
// budget_s is required for CSV and ignored for JSON (pass any value).
Instance load_instance_any(const std::string& path, double csv_budget_s,
                           MetricKind csv_metric = MetricKind::kEuclidean);

// Writes the JSON form. load_instance(save_instance(I)) reproduces I with
// bit-identical numbers.
void save_instance(const Instance& instance, const std::string& path);
std::string instance_to_json(const Instance& instance);

}  // namespace kmsumm

#endif  // KMSUMM_INSTANCE_IO_HPP_
