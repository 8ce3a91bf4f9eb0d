/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef KMSUMM_KERNELS_HPP_
#define KMSUMM_KERNELS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "kmsumm/distance.hpp"
#include "kmsumm/instance.hpp"

// Data-parallel inner loops of the solver. Every kernel here comes in two
// builds: a plain serial reference and an OpenMP version. The parallel
// versions are written so that floating-point accumulation order per output
// element never depends on the schedule or thread count, which makes the two
// builds bit-identical; the tests assert exactly that.
namespace kmsumm::kernels {

// in = shot entering the selection; out = shot leaving, or -1 for a pure add.
struct Move {
  int in = -1;
  int out = -1;
  bool is_add() const { return out < 0; }
};

struct ScoredMove {
  Move move;
  double delta = 0.0;
};

// Total order used to pick one move out of a scan: lower delta first, then
// lower entering index, then lower leaving index (a pure add carries out = -1
// and so wins against swaps bringing in the same shot). Any tournament over
// this order yields the same winner no matter how candidates are grouped.
inline bool better(const ScoredMove& a, const ScoredMove& b) {
  if (a.delta != b.delta) return a.delta < b.delta;
  if (a.move.in != b.move.in) return a.move.in < b.move.in;
  return a.move.out < b.move.out;
}

// gains[j] = sum over shots i of min(0, dm[i][j] - d1[i]); for an unselected
// j this is the objective change of adding it, for a selected j it is zero.
// Each gains[j] accumulates in ascending i order in both builds.
std::vector<double> build_add_gains(const DistanceMatrix& dm, std::span<const double> d1);
std::vector<double> build_add_gains_serial(const DistanceMatrix& dm, std::span<const double> d1);

// One shot's nearest-selected distance changed from old_d1 to new_d1.
struct GainUpdate {
  int shot;
  double old_d1;
  double new_d1;
};

// Folds a batch of nearest-distance changes into gains. Updates must be
// ordered by ascending shot; each gains[j] applies them in that order.
void apply_gain_updates(const DistanceMatrix& dm, std::span<const GainUpdate> updates,
                        std::span<double> gains);
void apply_gain_updates_serial(const DistanceMatrix& dm, std::span<const GainUpdate> updates,
                               std::span<double> gains);

// Read-only view of the solver state a swap scan needs.
struct SwapScanInput {
  const DistanceMatrix* dm = nullptr;
  const Instance* instance = nullptr;
  std::span<const int> selected;          // sorted ascending
  std::span<const int> position_in_selected;  // per shot; -1 when unselected
  std::span<const int> nearest1;
  std::span<const double> d1;
  std::span<const double> d2;
  std::span<const double> add_gains;
};

// Best feasible swap under the `better` order, or nullopt when no swap fits
// the budget. The per-candidate work is identical in both builds; the
// parallel one splits candidates across threads and merges thread winners in
// candidate order.
std::optional<ScoredMove> best_feasible_swap(const SwapScanInput& input);
std::optional<ScoredMove> best_feasible_swap_serial(const SwapScanInput& input);

}  // namespace kmsumm::kernels

#endif  // KMSUMM_KERNELS_HPP_
