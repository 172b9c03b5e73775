#pragma once

#include "bnkit/cube.hpp"
#include "bnkit/network.hpp"
#include "bnkit/sat.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace bnkit {

enum class Problem { fixed_points, minimal_trap_spaces, maximal_trap_spaces };

struct SolverOptions {
  /// Seeds the tie-breaking jitter of the initial branching order.
  std::uint64_t seed = 0x5EEDu;
  /// Branch on rarely occurring components first instead of frequent ones.
  bool reverse_branching = false;
  /// Cooperative deadline, polled between branching decisions and conflicts.
  std::optional<sat::Clock::time_point> deadline;
};

/// An enumeration request. `within` restricts to solutions contained in the
/// cube (default: the full cube); `limit` stops after that many solutions.
struct Query {
  Problem kind = Problem::minimal_trap_spaces;
  std::optional<Cube> within;
  std::optional<std::size_t> limit;
};

/// Anytime stream of solutions. Each solution is produced as soon as it is
/// certified, never repeated, and the stream ends after `limit` items or when
/// the solution set is exhausted. Fixed points come out as cubes without free
/// components.
///
/// The network must outlive the stream. `next` throws TimeoutError when the
/// deadline in the options expires.
class SolutionStream {
public:
  SolutionStream(const BooleanNetwork &net, const Query &query, const SolverOptions &options = {});
  SolutionStream(SolutionStream &&) noexcept;
  SolutionStream &operator=(SolutionStream &&) noexcept;
  ~SolutionStream();

  std::optional<Cube> next();
  std::size_t emitted() const noexcept;

private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

/// Fixed points as states.
class FixedPointStream {
public:
  FixedPointStream(const BooleanNetwork &net, std::optional<Cube> within = std::nullopt,
                   std::optional<std::size_t> limit = std::nullopt,
                   const SolverOptions &options = {});

  std::optional<State> next();

private:
  SolutionStream stream_;
};

FixedPointStream enumerate_fixed_points(const BooleanNetwork &net,
                                        std::optional<Cube> within = std::nullopt,
                                        std::optional<std::size_t> limit = std::nullopt,
                                        const SolverOptions &options = {});
SolutionStream enumerate_minimal_trap_spaces(const BooleanNetwork &net,
                                             std::optional<Cube> within = std::nullopt,
                                             std::optional<std::size_t> limit = std::nullopt,
                                             const SolverOptions &options = {});
SolutionStream enumerate_maximal_trap_spaces(const BooleanNetwork &net,
                                             std::optional<Cube> within = std::nullopt,
                                             std::optional<std::size_t> limit = std::nullopt,
                                             const SolverOptions &options = {});

/// Drains a stream.
std::vector<Cube> collect(SolutionStream &stream);
std::vector<State> collect(FixedPointStream &stream);

std::size_t count_solutions(const BooleanNetwork &net, const Query &query,
                            const SolverOptions &options = {});

} // namespace bnkit
