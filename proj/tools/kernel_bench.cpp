/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Times the serial reference kernels against their OpenMP builds and checks
 * they produce identical bytes while at it. Thread count comes from
 * OMP_NUM_THREADS or --threads.
 */

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "kmsumm/ils.hpp"
#include "kmsumm/kernels.hpp"
#include "kmsumm/oracle.hpp"
#include "kmsumm/synth.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& body, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    body();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    best = std::min(best, ms);
  }
  return best;
}

std::vector<int> parse_sizes(const std::string& csv) {
  std::vector<int> sizes;
  std::istringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) sizes.push_back(std::stoi(item));
  }
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  std::string sizes_csv = "100,300,1000";
  int dim = 96;
  double budget_s = 60.0;
  int reps = 3;
  unsigned long seed = 20260821;
  int threads = 0;

  CLI::App app{"Kernel timing: serial reference vs OpenMP build"};
  app.add_option("--sizes", sizes_csv, "Comma-separated shot counts");
  app.add_option("--dim", dim, "Feature dimension");
  app.add_option("--budget-seconds", budget_s, "Summary budget for the synthetic instances");
  app.add_option("--reps", reps, "Repetitions per measurement (best-of)");
  app.add_option("--seed", seed, "Instance generator seed");
  app.add_option("--threads", threads, "OpenMP thread count (0 = library default)");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
  std::printf("openmp enabled, %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("openmp disabled; both columns run the serial code\n");
#endif

  std::printf("%6s  %-22s %12s %12s %9s\n", "n", "kernel", "serial_ms", "openmp_ms", "speedup");

  std::vector<double> solve_ms;
  const std::vector<int> sizes = parse_sizes(sizes_csv);
  for (int n : sizes) {
    kmsumm::SynthParams params;
    params.shot_count = n;
    params.feature_dim = dim;
    params.budget_s = budget_s;
    params.seed = seed;
    const kmsumm::Instance instance = kmsumm::make_random_instance(params);

    kmsumm::DistanceMatrix dm_serial, dm_parallel;
    const double dm_s = time_ms([&] { dm_serial = kmsumm::build_distance_matrix_serial(instance); }, reps);
    const double dm_p = time_ms([&] { dm_parallel = kmsumm::build_distance_matrix(instance); }, reps);
    const bool dm_same = dm_serial.values() == dm_parallel.values();
    std::printf("%6d  %-22s %12.3f %12.3f %8.2fx%s\n", n, "distance_matrix", dm_s, dm_p,
                dm_s / dm_p, dm_same ? "" : "  MISMATCH");

    // Kernel inputs taken at a converged state, where swap scans do the work.
    const kmsumm::LocalSearchOutcome descended =
        kmsumm::local_search(dm_serial, instance, kmsumm::init_solution(instance), {});
    const kmsumm::SearchState state(dm_serial, instance, descended.solution);

    std::vector<double> gains_serial, gains_parallel;
    const double g_s = time_ms(
        [&] { gains_serial = kmsumm::kernels::build_add_gains_serial(dm_serial, state.cache().d1); },
        reps);
    const double g_p = time_ms(
        [&] { gains_parallel = kmsumm::kernels::build_add_gains(dm_serial, state.cache().d1); },
        reps);
    const bool g_same = gains_serial == gains_parallel;
    std::printf("%6d  %-22s %12.3f %12.3f %8.2fx%s\n", n, "add_gains", g_s, g_p, g_s / g_p,
                g_same ? "" : "  MISMATCH");

    std::optional<kmsumm::kernels::ScoredMove> swap_serial, swap_parallel;
    const double s_s = time_ms(
        [&] { swap_serial = kmsumm::kernels::best_feasible_swap_serial(state.swap_scan_input()); },
        reps);
    const double s_p = time_ms(
        [&] { swap_parallel = kmsumm::kernels::best_feasible_swap(state.swap_scan_input()); },
        reps);
    const bool s_same = swap_serial.has_value() == swap_parallel.has_value() &&
                        (!swap_serial || (swap_serial->delta == swap_parallel->delta &&
                                          swap_serial->move.in == swap_parallel->move.in &&
                                          swap_serial->move.out == swap_parallel->move.out));
    std::printf("%6d  %-22s %12.3f %12.3f %8.2fx%s\n", n, "swap_scan", s_s, s_p, s_s / s_p,
                s_same ? "" : "  MISMATCH");

    const double ils_ms = time_ms(
        [&] {
          const kmsumm::IlsResult result = kmsumm::ils_summ(dm_serial, instance, {});
          (void)result;
        },
        reps);
    std::printf("%6d  %-22s %12s %12.3f\n", n, "ils_solve (excl dm)", "-", ils_ms);
    solve_ms.push_back(ils_ms);
  }

  if (sizes.size() >= 2) {
    // Least-squares slope of log(time) against log(n): the empirical growth
    // exponent of the solve, distance matrix construction excluded.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int k = static_cast<int>(sizes.size());
    for (int i = 0; i < k; ++i) {
      const double x = std::log(static_cast<double>(sizes[i]));
      const double y = std::log(solve_ms[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    std::printf("\nils_solve growth exponent across sizes: %.2f\n", slope);
  }
  return 0;
}
