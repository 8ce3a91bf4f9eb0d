/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "kmsumm/distance.hpp"

#include <cmath>

namespace kmsumm {

namespace {

// Fills the upper triangle rows i..j and mirrors into [j][i]. Each entry is
// written exactly once, so rows can be processed in parallel.
void fill_rows(const Instance& instance, DistanceMatrix& dm, int i) {
  const int n = instance.size();
  const std::vector<double>& a = instance.shots[i].features;
  double* row_i = dm.row(i);
  row_i[i] = 0.0;
  for (int j = i + 1; j < n; ++j) {
    const double d = metric_distance(a, instance.shots[j].features, instance.metric);
    row_i[j] = d;
    dm.row(j)[i] = d;
  }
}

void check_finite(const DistanceMatrix& dm) {
  for (double v : dm.values()) {
    if (!std::isfinite(v))
      throw ValidationError("non-finite distance; feature magnitudes overflow the metric");
  }
}

}  // namespace

double metric_distance(std::span<const double> a, std::span<const double> b, MetricKind metric) {
  const size_t dim = a.size();
  double acc = 0.0;
  switch (metric) {
    case MetricKind::kEuclidean:
    case MetricKind::kSquaredEuclidean:
      for (size_t d = 0; d < dim; ++d) {
        const double diff = a[d] - b[d];
        acc += diff * diff;
      }
      return metric == MetricKind::kEuclidean ? std::sqrt(acc) : acc;
    case MetricKind::kManhattan:
      for (size_t d = 0; d < dim; ++d) acc += std::fabs(a[d] - b[d]);
      return acc;
  }
  throw std::logic_error("unknown MetricKind value");
}

DistanceMatrix build_distance_matrix(const Instance& instance) {
  const int n = instance.size();
  DistanceMatrix dm(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (int i = 0; i < n; ++i) fill_rows(instance, dm, i);
  check_finite(dm);
  return dm;
}

DistanceMatrix build_distance_matrix_serial(const Instance& instance) {
  const int n = instance.size();
  DistanceMatrix dm(n);
  for (int i = 0; i < n; ++i) fill_rows(instance, dm, i);
  check_finite(dm);
  return dm;
}

}  // namespace kmsumm
