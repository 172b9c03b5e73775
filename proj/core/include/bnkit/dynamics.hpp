#pragma once

#include "bnkit/cube.hpp"
#include "bnkit/network.hpp"
#include "bnkit/solver.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bnkit {

enum class UpdateMode { synchronous, asynchronous, general, most_permissive };

std::string_view to_string(UpdateMode mode);
/// Accepts `synchronous`, `asynchronous`, `general` and `mp` (also
/// `most-permissive`).
UpdateMode parse_update_mode(std::string_view text);

/// Component value under most permissive dynamics.
enum class MpValue : std::uint8_t { zero = 0, one = 1, increasing = 2, decreasing = 3 };

/// Vector over {0, 1, increasing, decreasing}. Printed with `u` for
/// increasing and `d` for decreasing.
class ExtendedState {
public:
  ExtendedState() = default;
  explicit ExtendedState(std::size_t n) : values_(n, MpValue::zero) {}
  static ExtendedState from_state(const State &x);
  static ExtendedState parse(std::string_view text);

  std::size_t size() const noexcept { return values_.size(); }
  MpValue operator[](std::size_t i) const noexcept { return values_[i]; }
  void set(std::size_t i, MpValue v) noexcept { values_[i] = v; }
  bool is_binary() const noexcept;
  /// Cube with every increasing or decreasing component free.
  Cube gamma() const;
  std::string to_string() const;

  friend auto operator<=>(const ExtendedState &, const ExtendedState &) = default;

private:
  std::vector<MpValue> values_;
};

/// Successor states under a Boolean update mode, self-loops omitted.
std::vector<State> successors(const BooleanNetwork &net, const State &x, UpdateMode mode);

/// Single-component most permissive rewrites: 0 or decreasing may start
/// increasing when f_i can be 1 on gamma(s); 1 or increasing may start
/// decreasing when f_i can be 0 on gamma(s); increasing may settle to 1 and
/// decreasing to 0 unconditionally.
std::vector<ExtendedState> mp_successors(const BooleanNetwork &net, const ExtendedState &s);

/// Hook for user-defined update modes.
using SuccessorFunction = std::function<std::vector<State>(const BooleanNetwork &, const State &)>;

/// State transition graph. Nodes are sorted by their string labels; edges are
/// index pairs sorted lexicographically.
struct Stg {
  std::string mode;
  std::vector<std::string> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t out_degree(std::size_t node) const;
};

struct StgLimits {
  std::size_t boolean_cap = 20;
  std::size_t mp_cap = 12;
};

/// Full graph over the states in `restrict_to` (default: all). For the most
/// permissive mode the nodes are the extended states whose gamma-cube meets
/// the restriction.
Stg build_stg(const BooleanNetwork &net, UpdateMode mode,
              const std::optional<Cube> &restrict_to = std::nullopt, const StgLimits &limits = {});
Stg build_stg(const BooleanNetwork &net, const std::string &mode_name,
              const SuccessorFunction &successor_fn,
              const std::optional<Cube> &restrict_to = std::nullopt, const StgLimits &limits = {});

/// Binary-state projection of most permissive dynamics: an edge x -> y for
/// every y != x reachable from x.
Stg build_mp_projection(const BooleanNetwork &net,
                        const std::optional<Cube> &restrict_to = std::nullopt,
                        const StgLimits &limits = {});

constexpr std::size_t default_mp_search_cap = 24;

/// Existence of a trajectory from x to y. Boolean modes search the graph on
/// the fly; the most permissive mode runs an explicit search over extended
/// states (after a closure pre-filter). Throws CapacityError when the
/// network is larger than `mp_cap` in the most permissive mode.
bool reachability(const BooleanNetwork &net, const State &x, const State &y,
                  UpdateMode mode = UpdateMode::most_permissive,
                  std::size_t mp_cap = default_mp_search_cap);
bool reachability(const BooleanNetwork &net, const State &x, const State &y,
                  const SuccessorFunction &successor_fn);

/// Every binary state reachable from x under the most permissive mode,
/// x included.
std::vector<State> mp_reachable_states(const BooleanNetwork &net, const State &x,
                                       std::size_t mp_cap = default_mp_search_cap);

/// Most permissive attractors, i.e. minimal trap spaces; with
/// `reachable_from`, only those contained in the closure of that state.
SolutionStream attractors(const BooleanNetwork &net,
                          const std::optional<State> &reachable_from = std::nullopt,
                          std::optional<std::size_t> limit = std::nullopt,
                          const SolverOptions &options = {});

enum class Sign { positive, negative };

struct InfluenceEdge {
  ComponentIndex source;
  Sign sign;
  ComponentIndex target;

  friend auto operator<=>(const InfluenceEdge &, const InfluenceEdge &) = default;
};

/// Signed edges read off the canonical DNFs; sorted by (target, source,
/// sign).
struct InfluenceGraph {
  std::vector<InfluenceEdge> edges;
};

InfluenceGraph influence_graph(const BooleanNetwork &net);

} // namespace bnkit
