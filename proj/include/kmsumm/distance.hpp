/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef KMSUMM_DISTANCE_HPP_
#define KMSUMM_DISTANCE_HPP_

#include <span>
#include <vector>

#include "kmsumm/instance.hpp"

namespace kmsumm {

// Dense symmetric N x N matrix of pairwise shot distances, zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), values_(static_cast<size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double at(int i, int j) const { return values_[static_cast<size_t>(i) * n_ + j]; }
  double* row(int i) { return values_.data() + static_cast<size_t>(i) * n_; }
  const double* row(int i) const { return values_.data() + static_cast<size_t>(i) * n_; }
  const std::vector<double>& values() const { return values_; }

 private:
  int n_ = 0;
  std::vector<double> values_;
};

// Distance between two feature vectors, accumulated in dimension order so the
// result does not depend on how callers are scheduled.
double metric_distance(std::span<const double> a, std::span<const double> b, MetricKind metric);

// Pairwise distances for all shots. The parallel build splits work by row and
// produces bit-identical output to the serial one; both reject non-finite
// results. The serial variant exists as the comparison reference.
DistanceMatrix build_distance_matrix(const Instance& instance);
DistanceMatrix build_distance_matrix_serial(const Instance& instance);

}  // namespace kmsumm

#endif  // KMSUMM_DISTANCE_HPP_
