#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bnkit::sat {

using Var = std::uint32_t;

/// Variable with a sign; `code = 2 * var + negative`.
struct Lit {
  std::uint32_t code = 0;

  static constexpr Lit make(Var v, bool negative = false) noexcept {
    return Lit{2 * v + (negative ? 1u : 0u)};
  }
  constexpr Var var() const noexcept { return code >> 1; }
  constexpr bool negative() const noexcept { return (code & 1u) != 0; }
  constexpr Lit operator~() const noexcept { return Lit{code ^ 1u}; }
  friend constexpr bool operator==(Lit, Lit) = default;
};

using Clock = std::chrono::steady_clock;

enum class Result { sat, unsat, unknown };

/// Incremental CDCL solver: two watched literals, first-UIP learning, VSIDS
/// with phase saving, Luby restarts, solving under assumptions.
///
/// `solve` returns `unknown` only when the deadline passes; the deadline is
/// polled between decisions and conflicts.
class Solver {
public:
  Var new_var(bool preferred_phase = false, double initial_activity = 0.0);
  std::size_t var_count() const noexcept { return assigns_.size(); }

  /// Adds a permanent clause. Returns false once the formula is known
  /// unsatisfiable (including when the clause is empty).
  bool add_clause(std::span<const Lit> lits);
  bool add_clause(std::initializer_list<Lit> lits) {
    return add_clause(std::span<const Lit>(lits.begin(), lits.size()));
  }

  Result solve(std::span<const Lit> assumptions = {},
               std::optional<Clock::time_point> deadline = std::nullopt);

  /// Value in the last model; defined after `solve` returned `sat`.
  bool model_value(Var v) const noexcept { return model_[v] > 0; }
  bool model_value(Lit l) const noexcept { return model_value(l.var()) != l.negative(); }

  bool okay() const noexcept { return ok_; }
  void set_phase(Var v, bool value) noexcept { polarity_[v] = value; }

  std::uint64_t conflicts() const noexcept { return conflicts_; }
  std::uint64_t decisions() const noexcept { return decisions_; }

private:
  static constexpr std::uint32_t no_reason = UINT32_MAX;

  struct Clause {
    std::vector<Lit> lits;
    double activity = 0.0;
    std::uint32_t lbd = 0;
    bool learnt = false;
    bool deleted = false;
  };

  struct Watcher {
    std::uint32_t cref;
    Lit blocker;
  };

  std::int8_t value(Lit l) const noexcept {
    const std::int8_t v = assigns_[l.var()];
    return l.negative() ? static_cast<std::int8_t>(-v) : v;
  }
  std::uint32_t decision_level() const noexcept {
    return static_cast<std::uint32_t>(trail_lim_.size());
  }

  void enqueue(Lit l, std::uint32_t reason);
  std::uint32_t propagate();
  void analyze(std::uint32_t conflict, std::vector<Lit> &learnt, std::uint32_t &backtrack_level);
  bool redundant(Lit l, std::uint32_t abstract_levels);
  void cancel_until(std::uint32_t level);
  std::optional<Lit> pick_branch();
  Result search(std::uint64_t conflict_budget, std::span<const Lit> assumptions,
                const std::optional<Clock::time_point> &deadline);
  std::uint32_t attach(std::vector<Lit> lits, bool learnt);
  void reduce_learnts();
  bool locked(std::uint32_t cref) const;

  void bump_var(Var v);
  void bump_clause(Clause &c);
  void heap_insert(Var v);
  void heap_up(std::size_t pos);
  void heap_down(std::size_t pos);
  Var heap_pop();
  bool heap_less(Var a, Var b) const noexcept { return activity_[a] > activity_[b]; }

  std::vector<std::int8_t> assigns_;
  std::vector<std::int8_t> model_;
  std::vector<bool> polarity_;
  std::vector<double> activity_;
  std::vector<std::uint32_t> level_;
  std::vector<std::uint32_t> reason_;
  std::vector<char> seen_;

  std::vector<Clause> clauses_;
  std::vector<std::uint32_t> learnts_;
  std::vector<std::vector<Watcher>> watches_;

  std::vector<Lit> trail_;
  std::vector<std::uint32_t> trail_lim_;
  std::size_t qhead_ = 0;

  std::vector<Var> heap_;
  std::vector<std::int64_t> heap_pos_;

  double var_inc_ = 1.0;
  double clause_inc_ = 1.0;
  double max_learnts_ = 0.0;
  bool ok_ = true;
  std::uint64_t conflicts_ = 0;
  std::uint64_t decisions_ = 0;
  std::vector<Lit> analyze_stack_;
  std::vector<Var> analyze_clear_;
};

} // namespace bnkit::sat
