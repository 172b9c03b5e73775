#pragma once

#include "bnkit/solver.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace bnkit::cli {

enum class BenchStatus { ok, timeout, error };

std::string_view to_string(BenchStatus status);

struct BenchRecord {
  std::string model;
  std::string problem;
  double seconds = 0.0;
  BenchStatus status = BenchStatus::ok;
  std::string message;
};

struct BenchOptions {
  Problem problem = Problem::minimal_trap_spaces;
  double timeout_seconds = 3600.0;
  /// Models run on this many worker threads; 1 runs them sequentially.
  std::size_t jobs = 1;
  SolverOptions solver;
};

/// Cumulative-completion columns, in seconds.
inline constexpr std::array<double, 6> bench_thresholds{0.5, 2.0, 10.0, 60.0, 600.0, 3600.0};
inline constexpr std::array<std::string_view, 6> bench_threshold_labels{
    "<0.5s", "<2s", "<10s", "<1min", "<10min", "<1h"};

std::string_view problem_code(Problem problem);
/// Accepts `fix`, `min` and `max`.
Problem parse_problem_code(std::string_view text);

/// Time to the first solution on one model, parsing included. A run that
/// completes without finding any solution also counts as completed.
BenchRecord bench_model(const std::string &path, const BenchOptions &options);

/// Every `*.bnet` file in `suite_dir`, sorted by file name.
std::vector<std::string> suite_models(const std::string &suite_dir);

/// Records in suite order.
std::vector<BenchRecord> run_bench(const std::string &suite_dir, const BenchOptions &options);

/// Header `model<TAB>problem<TAB>seconds<TAB>status` and one row per record.
std::string bench_tsv(const std::vector<BenchRecord> &records);

/// Number of completed models under each threshold.
std::array<std::size_t, 6> cumulative_counts(const std::vector<BenchRecord> &records);

/// Aligned table with one row for the problem and the six threshold columns.
std::string cumulative_table(const std::vector<BenchRecord> &records, Problem problem);

} // namespace bnkit::cli
