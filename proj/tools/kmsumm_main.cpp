/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Command-line front end. Exit codes: 0 success, 2 usage error, 3 unreadable
 * or invalid input, 4 infeasible instance, 5 refused exact solve (instance
 * over the size cap without --force).
 */

#include <algorithm>
#include <cfloat>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "kmsumm/features.hpp"
#include "kmsumm/ils.hpp"
#include "kmsumm/instance_io.hpp"
#include "kmsumm/objective.hpp"
#include "kmsumm/oracle.hpp"
#include "kmsumm/report.hpp"

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Command line is syntactically fine but semantically unusable (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact solve refused because the instance is over the size cap (exit 5).
struct CapRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetFlags {
  double seconds = 0.0;
  double ratio = 0.0;
  double cap_seconds = 0.0;

  bool any() const { return seconds > 0.0 || ratio > 0.0; }

  void check() const {
    if (seconds > 0.0 && ratio > 0.0)
      throw UsageError("--budget-seconds and --budget-ratio are mutually exclusive");
    if (cap_seconds > 0.0 && ratio <= 0.0)
      throw UsageError("--budget-cap-seconds only applies together with --budget-ratio");
  }

  double resolve(double total_video_s) const {
    if (seconds > 0.0) return seconds;
    if (cap_seconds > 0.0) return kmsumm::derive_budget_capped(total_video_s, cap_seconds, ratio);
    return kmsumm::derive_budget_by_ratio(total_video_s, ratio);
  }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& flags) {
  cmd->add_option("--budget-seconds", flags.seconds, "Summary budget in seconds");
  cmd->add_option("--budget-ratio", flags.ratio,
                  "Summary budget as a fraction of the video duration (0 < r < 1)");
  cmd->add_option("--budget-cap-seconds", flags.cap_seconds,
                  "Upper bound applied on top of --budget-ratio");
}

// Loads an instance and applies metric/budget overrides. CSV files carry no
// budget of their own, so one of the budget flags is mandatory for them.
kmsumm::Instance load_with_overrides(const std::string& path, const BudgetFlags& budget,
                                     const std::string& metric_name, double video_duration_s) {
  budget.check();
  const bool is_csv = path.size() >= 4 && path.substr(path.size() - 4) == ".csv";
  if (is_csv && !budget.any())
    throw UsageError("CSV instances carry no budget; pass --budget-seconds or --budget-ratio");

  kmsumm::Instance instance = kmsumm::load_instance_any(path, DBL_MAX);
  if (!metric_name.empty()) instance.metric = kmsumm::metric_from_string(metric_name);
  if (budget.any()) {
    const double total = video_duration_s > 0.0 ? video_duration_s : instance.total_duration_s();
    instance.budget_s = budget.resolve(total);
    kmsumm::validate_instance(instance);
  }
  return instance;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("error while writing '" + out_path + "'");
}

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct MethodRun {
  kmsumm::Solution solution;
  kmsumm::SolveCounters counters;
  double wall_time_ms = 0.0;
  bool proved_optimal = false;  // meaningful for "exact" only
};

void refuse_oversized_exact(const kmsumm::Instance& instance, int max_n, bool force) {
  if (instance.size() > max_n && !force)
    throw CapRefusal("exact solve refused: instance has " + std::to_string(instance.size()) +
                     " shots, over the cap of " + std::to_string(max_n) +
                     "; pass --force to run anyway");
}

MethodRun run_method(const std::string& method, const kmsumm::DistanceMatrix& dm,
                     const kmsumm::Instance& instance, const kmsumm::IlsParams& ils_params,
                     double restart_budget_s, const kmsumm::OracleLimits& oracle_limits) {
  const auto started = Clock::now();
  if (method == "ils") {
    kmsumm::IlsResult result = kmsumm::ils_summ(dm, instance, ils_params);
    return {std::move(result.solution),
            {result.trace.local_search_steps, result.trace.perturbations, 0},
            elapsed_ms(started),
            false};
  }
  if (method == "local") {
    kmsumm::LocalSearchOutcome outcome = kmsumm::local_search(
        dm, instance, kmsumm::init_solution(instance), ils_params.local_search);
    return {std::move(outcome.solution), {outcome.steps_taken, 0, 0}, elapsed_ms(started), false};
  }
  if (method == "restart") {
    kmsumm::RestartOutcome outcome =
        kmsumm::restart_summ(dm, instance, ils_params.local_search, restart_budget_s);
    return {std::move(outcome.solution), {outcome.total_steps, 0, 0}, elapsed_ms(started), false};
  }
  if (method == "exact") {
    kmsumm::OracleResult result = kmsumm::exact_solve(dm, instance, oracle_limits);
    return {std::move(result.solution),
            {0, 0, result.nodes_explored},
            elapsed_ms(started),
            result.proved_optimal};
  }
  throw UsageError("unknown method '" + method + "'");
}

struct SolveArgs {
  std::string instance_path;
  std::string method = "ils";
  BudgetFlags budget;
  std::string metric;
  int m_max = 5;
  int max_trials = 10000;
  double time_budget_s = 0.0;
  double video_duration_s = 0.0;
  std::string out;
  int exact_max_n = 24;
  bool exact_force = false;
  long exact_node_cap = 50'000'000;
  double exact_time_cap_s = 0.0;
};

int cmd_solve(const SolveArgs& args) {
  kmsumm::Instance instance = load_with_overrides(args.instance_path, args.budget, args.metric,
                                                  args.video_duration_s);
  if (args.method == "exact") refuse_oversized_exact(instance, args.exact_max_n, args.exact_force);

  kmsumm::IlsParams ils_params;
  ils_params.m_max = args.m_max;
  ils_params.local_search.max_trials = args.max_trials;

  // Restart keeps launching new descents until its wall-clock budget runs
  // out; by default it gets the video duration, i.e. watching the summary
  // pipeline may not take longer than watching the video.
  const double restart_budget_s =
      args.time_budget_s > 0.0
          ? args.time_budget_s
          : (args.video_duration_s > 0.0 ? args.video_duration_s : instance.total_duration_s());

  kmsumm::OracleLimits oracle_limits;
  oracle_limits.max_nodes = args.exact_node_cap;
  if (args.exact_time_cap_s > 0.0) oracle_limits.max_seconds = args.exact_time_cap_s;

  const kmsumm::DistanceMatrix dm = kmsumm::build_distance_matrix(instance);
  const MethodRun run =
      run_method(args.method, dm, instance, ils_params, restart_budget_s, oracle_limits);

  const double td = kmsumm::total_distance(dm, run.solution);
  kmsumm::SolveReport report =
      kmsumm::make_report(dm, instance, args.method, run.solution, td, run.counters,
                          run.wall_time_ms);
  if (args.method == "exact") {
    report.proved_optimal = run.proved_optimal;
    if (run.proved_optimal) report.optimality_percent = kmsumm::optimality_percentage(td, td);
  }
  if (args.video_duration_s > 0.0)
    report.runtime_pct_of_video = 100.0 * (run.wall_time_ms / 1000.0) / args.video_duration_s;

  emit(kmsumm::report_to_json(report), args.out);
  return 0;
}

struct BenchArgs {
  std::string instances_dir;
  std::string methods_csv = "ils,local,exact";
  int m_max = 5;
  int max_trials = 10000;
  double time_budget_s = 0.0;
  int exact_max_n = 24;
  long exact_node_cap = 50'000'000;
  std::string out;
};

std::vector<std::string> parse_methods(const std::string& csv) {
  std::vector<std::string> methods;
  std::istringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    if (item != "ils" && item != "local" && item != "restart" && item != "exact")
      throw UsageError("unknown method '" + item + "' in --methods");
    if (std::find(methods.begin(), methods.end(), item) == methods.end())
      methods.push_back(item);
  }
  if (methods.empty()) throw UsageError("--methods selects no methods");
  return methods;
}

int cmd_bench(const BenchArgs& args) {
  const std::vector<std::string> methods = parse_methods(args.methods_csv);
  if (!fs::is_directory(args.instances_dir))
    throw kmsumm::ParseError("'" + args.instances_dir + "' is not a directory");

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(args.instances_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<kmsumm::BenchRow> rows;
  for (const fs::path& file : files) {
    try {
      const kmsumm::Instance instance = kmsumm::load_instance(file.string());
      const kmsumm::DistanceMatrix dm = kmsumm::build_distance_matrix(instance);
      const double video_s = instance.total_duration_s();

      kmsumm::IlsParams ils_params;
      ils_params.m_max = args.m_max;
      ils_params.local_search.max_trials = args.max_trials;
      const double restart_budget_s = args.time_budget_s > 0.0 ? args.time_budget_s : video_s;

      // The optimum anchors the optimality column; skip it for instances the
      // exact solver would chew on for too long.
      const bool want_exact =
          std::find(methods.begin(), methods.end(), "exact") != methods.end();
      std::optional<double> td_optimal;
      std::optional<MethodRun> exact_run;
      if (want_exact && instance.size() <= args.exact_max_n) {
        kmsumm::OracleLimits limits;
        limits.max_nodes = args.exact_node_cap;
        exact_run = run_method("exact", dm, instance, ils_params, restart_budget_s, limits);
        if (exact_run->proved_optimal)
          td_optimal = kmsumm::total_distance(dm, exact_run->solution);
      }

      for (const std::string& method : methods) {
        if (method == "exact" && !exact_run) continue;
        const MethodRun run = method == "exact"
                                  ? *exact_run
                                  : run_method(method, dm, instance, ils_params, restart_budget_s,
                                               kmsumm::OracleLimits{args.exact_node_cap});
        const double td = kmsumm::total_distance(dm, run.solution);
        kmsumm::BenchRow row;
        row.instance_name = instance.name;
        row.method = method;
        row.td = td;
        if (td_optimal) row.optimality_percent = kmsumm::optimality_percentage(td, *td_optimal);
        row.wall_time_ms = run.wall_time_ms;
        row.runtime_pct_of_video = 100.0 * (run.wall_time_ms / 1000.0) / video_s;
        rows.push_back(std::move(row));
      }
    } catch (const std::exception& e) {
      std::cerr << "bench: skipping " << file.filename().string() << ": " << e.what() << "\n";
      kmsumm::BenchRow row;
      row.instance_name = file.stem().string();
      row.error = true;
      rows.push_back(std::move(row));
    }
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const kmsumm::BenchRow& a, const kmsumm::BenchRow& b) {
                     return a.instance_name < b.instance_name;
                   });

  std::ostringstream csv;
  csv << kmsumm::bench_csv_header() << "\n";
  for (const kmsumm::BenchRow& row : rows) csv << kmsumm::bench_row_csv(row) << "\n";

  // One summary line per method: the mean of every populated numeric cell.
  for (const std::string& method : methods) {
    kmsumm::BenchRow mean_row;
    mean_row.instance_name = "MEAN";
    mean_row.method = method;
    double td_sum = 0.0, opt_sum = 0.0, wall_sum = 0.0, pct_sum = 0.0;
    long td_n = 0, opt_n = 0, wall_n = 0, pct_n = 0;
    for (const kmsumm::BenchRow& row : rows) {
      if (row.method != method) continue;
      if (row.td) td_sum += *row.td, ++td_n;
      if (row.optimality_percent) opt_sum += *row.optimality_percent, ++opt_n;
      if (row.wall_time_ms) wall_sum += *row.wall_time_ms, ++wall_n;
      if (row.runtime_pct_of_video) pct_sum += *row.runtime_pct_of_video, ++pct_n;
    }
    if (td_n > 0) mean_row.td = td_sum / td_n;
    if (opt_n > 0) mean_row.optimality_percent = opt_sum / opt_n;
    if (wall_n > 0) mean_row.wall_time_ms = wall_sum / wall_n;
    if (pct_n > 0) mean_row.runtime_pct_of_video = pct_sum / pct_n;
    if (td_n > 0) csv << kmsumm::bench_row_csv(mean_row) << "\n";
  }

  if (rows.empty())
    std::cerr << "bench: no *.json instances under '" << args.instances_dir << "'\n";

  emit(csv.str(), args.out);
  return 0;
}

struct FeaturesArgs {
  std::string frames_dir;
  std::string manifest;
  BudgetFlags budget;
  int bins = 32;
  bool raw_counts = false;
  std::string metric = "euclidean";
  std::string name;
  std::string out;
};

int cmd_features(const FeaturesArgs& args) {
  args.budget.check();
  if (!args.budget.any())
    throw UsageError("pass --budget-seconds or --budget-ratio for the new instance");

  // Ratio budgets are relative to the video duration, i.e. the sum of the
  // manifest's shot durations.
  const std::vector<kmsumm::ManifestEntry> entries = kmsumm::load_manifest(args.manifest);
  double total_s = 0.0;
  for (const kmsumm::ManifestEntry& entry : entries) total_s += entry.duration_s;
  const double budget_s = args.budget.resolve(total_s);

  kmsumm::HistogramConfig config;
  config.bins_per_channel = args.bins;
  config.normalize = !args.raw_counts;

  const kmsumm::Instance instance =
      kmsumm::build_instance(args.frames_dir, args.manifest, budget_s, config, args.name,
                             kmsumm::metric_from_string(args.metric));
  emit(kmsumm::instance_to_json(instance), args.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shot-subset video summarization: pick shots whose features cover the video "
               "best within a duration budget"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Run a solver on an instance file");
  solve->add_option("--instance", solve_args.instance_path, "Instance file (.json or .csv)")
      ->required();
  solve->add_option("--method", solve_args.method, "ils | local | restart | exact")
      ->check(CLI::IsMember({"ils", "local", "restart", "exact"}));
  add_budget_flags(solve, solve_args.budget);
  solve->add_option("--metric", solve_args.metric, "euclidean | sqeuclidean | manhattan")
      ->check(CLI::IsMember({"euclidean", "sqeuclidean", "manhattan"}));
  solve->add_option("--m-max", solve_args.m_max, "Strongest perturbation tried")
      ->check(CLI::PositiveNumber);
  solve->add_option("--max-trials", solve_args.max_trials, "Local-search step limit")
      ->check(CLI::PositiveNumber);
  solve->add_option("--time-budget-seconds", solve_args.time_budget_s,
                    "Wall-clock budget for restart (default: video duration)");
  solve->add_option("--video-duration-seconds", solve_args.video_duration_s,
                    "Source video length; anchors ratio budgets and runtime percentages");
  solve->add_option("--out", solve_args.out, "Report file (default: stdout)");
  solve->add_option("--exact-max-n", solve_args.exact_max_n,
                    "Largest instance `--method exact` accepts");
  solve->add_flag("--force", solve_args.exact_force, "Run exact over the size cap");
  solve->add_option("--node-cap", solve_args.exact_node_cap, "Exact search node limit");
  solve->add_option("--time-cap-seconds", solve_args.exact_time_cap_s, "Exact search time limit");

  SolveArgs exact_args;
  exact_args.method = "exact";
  CLI::App* exact = app.add_subcommand("exact", "Prove the optimum (small instances)");
  exact->add_option("--instance", exact_args.instance_path, "Instance file (.json or .csv)")
      ->required();
  add_budget_flags(exact, exact_args.budget);
  exact->add_option("--metric", exact_args.metric, "euclidean | sqeuclidean | manhattan")
      ->check(CLI::IsMember({"euclidean", "sqeuclidean", "manhattan"}));
  exact->add_option("--max-n", exact_args.exact_max_n,
                    "Refuse instances with more shots than this (default 24)");
  exact->add_flag("--force", exact_args.exact_force, "Run despite the size cap");
  exact->add_option("--node-cap", exact_args.exact_node_cap, "Node limit; ends with best found");
  exact->add_option("--time-cap-seconds", exact_args.exact_time_cap_s,
                    "Time limit; ends with best found");
  exact->add_option("--video-duration-seconds", exact_args.video_duration_s,
                    "Source video length; anchors ratio budgets and runtime percentages");
  exact->add_option("--out", exact_args.out, "Report file (default: stdout)");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Compare methods across an instance directory");
  bench->add_option("--instances-dir", bench_args.instances_dir, "Directory of *.json instances")
      ->required();
  bench->add_option("--methods", bench_args.methods_csv,
                    "Comma-separated subset of ils,local,restart,exact");
  bench->add_option("--m-max", bench_args.m_max, "Strongest perturbation tried")
      ->check(CLI::PositiveNumber);
  bench->add_option("--max-trials", bench_args.max_trials, "Local-search step limit")
      ->check(CLI::PositiveNumber);
  bench->add_option("--time-budget-seconds", bench_args.time_budget_s,
                    "Restart budget per instance (default: that instance's video duration)");
  bench->add_option("--exact-max-n", bench_args.exact_max_n,
                    "Skip the optimality columns for instances larger than this");
  bench->add_option("--node-cap", bench_args.exact_node_cap, "Exact search node limit");
  bench->add_option("--out", bench_args.out, "CSV file (default: stdout)");

  FeaturesArgs features_args;
  CLI::App* features = app.add_subcommand(
      "features", "Build an instance from frame images and a duration manifest");
  features->add_option("--frames-dir", features_args.frames_dir, "Directory with PPM frames")
      ->required();
  features->add_option("--manifest", features_args.manifest,
                       "CSV of frame_filename,duration_seconds")
      ->required();
  add_budget_flags(features, features_args.budget);
  features->add_option("--bins", features_args.bins, "Histogram bins per channel (default 32)");
  features->add_flag("--raw-counts", features_args.raw_counts,
                     "Keep raw bin counts instead of normalizing per channel");
  features->add_option("--metric", features_args.metric, "Metric stored in the instance")
      ->check(CLI::IsMember({"euclidean", "sqeuclidean", "manhattan"}));
  features->add_option("--name", features_args.name, "Instance name (default: manifest stem)");
  features->add_option("--out", features_args.out, "Instance file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(solve)) return cmd_solve(solve_args);
    if (app.got_subcommand(exact)) return cmd_solve(exact_args);
    if (app.got_subcommand(bench)) return cmd_bench(bench_args);
    if (app.got_subcommand(features)) return cmd_features(features_args);
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapRefusal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const kmsumm::InfeasibleInstanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const kmsumm::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const kmsumm::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
