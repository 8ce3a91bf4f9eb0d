/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef KMSUMM_SYNTH_HPP_
#define KMSUMM_SYNTH_HPP_

#include "kmsumm/instance.hpp"

namespace kmsumm {

// Recipe for a reproducible random instance: features i.i.d. uniform on
// [0, 1], durations uniform on [duration_lo_s, duration_hi_s]. The budget is
// either budget_s, or budget_fraction of the total duration when budget_s
// is zero.
struct SynthParams {
  int shot_count = 0;
  int feature_dim = 0;
  double duration_lo_s = 1.0;
  double duration_hi_s = 5.0;
  double budget_s = 0.0;
  double budget_fraction = 0.4;
  unsigned long seed = 0;
  MetricKind metric = MetricKind::kEuclidean;
};

Instance make_random_instance(const SynthParams& params);

}  // namespace kmsumm

#endif  // KMSUMM_SYNTH_HPP_
