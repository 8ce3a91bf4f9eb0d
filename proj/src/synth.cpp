/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "kmsumm/synth.hpp"

#include <random>
#include <stdexcept>

namespace kmsumm {

Instance make_random_instance(const SynthParams& params) {
  if (params.shot_count < 1 || params.feature_dim < 1)
    throw std::invalid_argument("shot_count and feature_dim must be at least 1");
  if (!(params.duration_lo_s > 0.0) || params.duration_hi_s < params.duration_lo_s)
    throw std::invalid_argument("duration range must be positive and ordered");

  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> duration(params.duration_lo_s, params.duration_hi_s);

  Instance instance;
  instance.name = "synthetic-n" + std::to_string(params.shot_count) + "-d" +
                  std::to_string(params.feature_dim) + "-s" + std::to_string(params.seed);
  instance.metric = params.metric;
  instance.shots.resize(params.shot_count);
  for (int i = 0; i < params.shot_count; ++i) {
    Shot& shot = instance.shots[i];
    shot.id = "shot" + std::to_string(i);
    shot.duration_s = duration(rng);
    shot.features.resize(params.feature_dim);
    for (double& f : shot.features) f = unit(rng);
  }

  if (params.budget_s > 0.0) {
    instance.budget_s = params.budget_s;
  } else {
    if (!(params.budget_fraction > 0.0) || params.budget_fraction >= 1.0)
      throw std::invalid_argument("budget_fraction must lie strictly between 0 and 1");
    instance.budget_s = params.budget_fraction * instance.total_duration_s();
  }

  validate_instance(instance);
  return instance;
}

}  // namespace kmsumm
