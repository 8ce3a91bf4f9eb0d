/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "kmsumm/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kmsumm::kernels {

namespace {

// Tile width for splitting gain arrays across threads. Output elements are
// disjoint between tiles, so tiling affects locality only, never values.
constexpr int kGainTile = 2048;

void add_gains_for_tile(const DistanceMatrix& dm, std::span<const double> d1, int j_begin,
                        int j_end, double* gains) {
  const int n = dm.size();
  for (int i = 0; i < n; ++i) {
    const double* row = dm.row(i);
    const double base = d1[i];
    for (int j = j_begin; j < j_end; ++j) gains[j] += std::min(0.0, row[j] - base);
  }
}

void apply_updates_for_range(const DistanceMatrix& dm, std::span<const GainUpdate> updates,
                             int j_begin, int j_end, double* gains) {
  for (const GainUpdate& u : updates) {
    const double* row = dm.row(u.shot);
    for (int j = j_begin; j < j_end; ++j)
      gains[j] += std::min(0.0, row[j] - u.new_d1) - std::min(0.0, row[j] - u.old_d1);
  }
}

struct SwapScanContext {
  const SwapScanInput* input;
  std::span<const int> candidates;   // unselected shots, ascending
  std::span<const int> owner_position;  // position of nearest1[i] in the selection
};

// Evaluates every swap that brings `in` into the selection. One pass over the
// shots accumulates, per currently selected shot, the objective change beyond
// the plain add gain; candidates are then judged lazily against `best`,
// checking the budget only when a candidate would win.
void scan_candidate(const SwapScanContext& ctx, int in, std::vector<double>& loss,
                    std::optional<ScoredMove>& best) {
  const SwapScanInput& input = *ctx.input;
  const DistanceMatrix& dm = *input.dm;
  const int n = dm.size();
  const int k = static_cast<int>(input.selected.size());

  std::fill(loss.begin(), loss.end(), 0.0);
  const double* row_in = dm.row(in);  // dm is symmetric: row in == column in
  for (int i = 0; i < n; ++i) {
    const double d = row_in[i];
    const double kept = std::min(d, input.d1[i]);
    const double bumped = std::min(d, input.d2[i]);
    loss[ctx.owner_position[i]] += bumped - kept;
  }

  const double gain = input.add_gains[in];
  for (int b = 0; b < k; ++b) {
    const ScoredMove candidate{{in, input.selected[b]}, gain + loss[b]};
    if (best && !better(candidate, *best)) continue;
    const double used = duration_with_swap(*input.instance, input.selected, candidate.move.out, in);
    if (used <= input.instance->budget_s) best = candidate;
  }
}

std::vector<int> unselected_candidates(const SwapScanInput& input) {
  const int n = input.dm->size();
  std::vector<int> candidates;
  candidates.reserve(n - input.selected.size());
  for (int j = 0; j < n; ++j) {
    if (input.position_in_selected[j] < 0) candidates.push_back(j);
  }
  return candidates;
}

std::vector<int> owner_positions(const SwapScanInput& input) {
  const int n = input.dm->size();
  std::vector<int> positions(n);
  for (int i = 0; i < n; ++i) positions[i] = input.position_in_selected[input.nearest1[i]];
  return positions;
}

}  // namespace

std::vector<double> build_add_gains_serial(const DistanceMatrix& dm, std::span<const double> d1) {
  const int n = dm.size();
  std::vector<double> gains(n, 0.0);
  add_gains_for_tile(dm, d1, 0, n, gains.data());
  return gains;
}

std::vector<double> build_add_gains(const DistanceMatrix& dm, std::span<const double> d1) {
  const int n = dm.size();
  std::vector<double> gains(n, 0.0);
  const int tiles = (n + kGainTile - 1) / kGainTile;
#pragma omp parallel for schedule(static)
  for (int t = 0; t < tiles; ++t) {
    const int j_begin = t * kGainTile;
    const int j_end = std::min(n, j_begin + kGainTile);
    add_gains_for_tile(dm, d1, j_begin, j_end, gains.data());
  }
  return gains;
}

void apply_gain_updates_serial(const DistanceMatrix& dm, std::span<const GainUpdate> updates,
                               std::span<double> gains) {
  apply_updates_for_range(dm, updates, 0, static_cast<int>(gains.size()), gains.data());
}

void apply_gain_updates(const DistanceMatrix& dm, std::span<const GainUpdate> updates,
                        std::span<double> gains) {
  const int n = static_cast<int>(gains.size());
  const int tiles = (n + kGainTile - 1) / kGainTile;
#pragma omp parallel for schedule(static)
  for (int t = 0; t < tiles; ++t) {
    const int j_begin = t * kGainTile;
    const int j_end = std::min(n, j_begin + kGainTile);
    apply_updates_for_range(dm, updates, j_begin, j_end, gains.data());
  }
}

std::optional<ScoredMove> best_feasible_swap_serial(const SwapScanInput& input) {
  const std::vector<int> candidates = unselected_candidates(input);
  const std::vector<int> owners = owner_positions(input);
  const SwapScanContext ctx{&input, candidates, owners};

  std::optional<ScoredMove> best;
  std::vector<double> loss(input.selected.size());
  for (int in : candidates) scan_candidate(ctx, in, loss, best);
  return best;
}

std::optional<ScoredMove> best_feasible_swap(const SwapScanInput& input) {
#ifndef _OPENMP
  return best_feasible_swap_serial(input);
#else
  const std::vector<int> candidates = unselected_candidates(input);
  const std::vector<int> owners = owner_positions(input);
  const SwapScanContext ctx{&input, candidates, owners};
  const int count = static_cast<int>(candidates.size());

  const int threads = omp_get_max_threads();
  std::vector<std::optional<ScoredMove>> thread_best(threads);
#pragma omp parallel num_threads(threads)
  {
    const int t = omp_get_thread_num();
    std::vector<double> loss(input.selected.size());
#pragma omp for schedule(static)
    for (int c = 0; c < count; ++c) scan_candidate(ctx, candidates[c], loss, thread_best[t]);
  }

  // The winner is the minimum under a total order, so how candidates were
  // split across threads cannot change it.
  std::optional<ScoredMove> best;
  for (const auto& local : thread_best) {
    if (local && (!best || better(*local, *best))) best = local;
  }
  return best;
#endif
}

}  // namespace kmsumm::kernels
