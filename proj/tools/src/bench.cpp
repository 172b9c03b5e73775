#include "bnkit/cli/bench.hpp"

#include "bnkit/error.hpp"
#include "bnkit/network.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <thread>

namespace bnkit::cli {

namespace fs = std::filesystem;

std::string_view to_string(BenchStatus status) {
  switch (status) {
  case BenchStatus::ok:
    return "ok";
  case BenchStatus::timeout:
    return "timeout";
  case BenchStatus::error:
    return "error";
  }
  return "";
}

std::string_view problem_code(Problem problem) {
  switch (problem) {
  case Problem::fixed_points:
    return "fix";
  case Problem::minimal_trap_spaces:
    return "min";
  case Problem::maximal_trap_spaces:
    return "max";
  }
  return "";
}

Problem parse_problem_code(std::string_view text) {
  if (text == "fix")
    return Problem::fixed_points;
  if (text == "min")
    return Problem::minimal_trap_spaces;
  if (text == "max")
    return Problem::maximal_trap_spaces;
  throw Error("unknown problem '" + std::string(text) + "' (expected fix, min or max)");
}

BenchRecord bench_model(const std::string &path, const BenchOptions &options) {
  using Clock = sat::Clock;
  BenchRecord record;
  record.model = fs::path(path).filename().string();
  record.problem = std::string(problem_code(options.problem));

  const auto start = Clock::now();
  const auto budget = std::chrono::duration_cast<Clock::duration>(
      std::chrono::duration<double>(options.timeout_seconds));
  SolverOptions solver = options.solver;
  solver.deadline = start + budget;
  try {
    const BooleanNetwork net = load_bnet(path);
    if (Clock::now() > *solver.deadline)
      throw TimeoutError();
    SolutionStream stream(net, {options.problem, std::nullopt, 1}, solver);
    stream.next();
    record.status = BenchStatus::ok;
  } catch (const TimeoutError &e) {
    record.status = BenchStatus::timeout;
    record.message = e.what();
  } catch (const std::exception &e) {
    record.status = BenchStatus::error;
    record.message = e.what();
  }
  record.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (record.status == BenchStatus::ok && record.seconds > options.timeout_seconds)
    record.status = BenchStatus::timeout;
  return record;
}

std::vector<std::string> suite_models(const std::string &suite_dir) {
  if (!fs::is_directory(suite_dir))
    throw Error("suite '" + suite_dir + "' is not a directory");
  std::vector<std::string> paths;
  for (const auto &entry : fs::directory_iterator(suite_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".bnet")
      paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end(), [](const std::string &a, const std::string &b) {
    return fs::path(a).filename() < fs::path(b).filename();
  });
  return paths;
}

std::vector<BenchRecord> run_bench(const std::string &suite_dir, const BenchOptions &options) {
  const auto paths = suite_models(suite_dir);
  std::vector<BenchRecord> records(paths.size());
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, paths.size()));
  if (jobs == 1) {
    for (std::size_t k = 0; k < paths.size(); ++k)
      records[k] = bench_model(paths[k], options);
    return records;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (std::size_t k = next++; k < paths.size(); k = next++)
        records[k] = bench_model(paths[k], options);
    });
  for (auto &t : workers)
    t.join();
  return records;
}

std::string bench_tsv(const std::vector<BenchRecord> &records) {
  std::string out = "model\tproblem\tseconds\tstatus\n";
  char seconds[32];
  for (const auto &r : records) {
    std::snprintf(seconds, sizeof seconds, "%.6f", r.seconds);
    out += r.model + "\t" + r.problem + "\t" + seconds + "\t" + std::string(to_string(r.status)) +
           "\n";
  }
  return out;
}

std::array<std::size_t, 6> cumulative_counts(const std::vector<BenchRecord> &records) {
  std::array<std::size_t, 6> counts{};
  for (const auto &r : records) {
    if (r.status != BenchStatus::ok)
      continue;
    for (std::size_t k = 0; k < bench_thresholds.size(); ++k)
      if (r.seconds < bench_thresholds[k])
        ++counts[k];
  }
  return counts;
}

std::string cumulative_table(const std::vector<BenchRecord> &records, Problem problem) {
  const auto counts = cumulative_counts(records);
  std::vector<std::string> header{"problem", "models"};
  std::vector<std::string> row{std::string(problem_code(problem)), std::to_string(records.size())};
  for (std::size_t k = 0; k < counts.size(); ++k) {
    header.emplace_back(bench_threshold_labels[k]);
    row.push_back(std::to_string(counts[k]));
  }
  std::string out;
  for (const auto *line : {&header, &row}) {
    for (std::size_t k = 0; k < line->size(); ++k) {
      const std::size_t width = std::max(header[k].size(), row[k].size());
      const std::string &cell = (*line)[k];
      if (k)
        out += "  ";
      out += k == 0 ? cell + std::string(width - cell.size(), ' ')
                    : std::string(width - cell.size(), ' ') + cell;
    }
    out += "\n";
  }
  return out;
}

} // namespace bnkit::cli
