#pragma once

#include "bnkit/expression.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace bnkit {

using ComponentIndex = std::uint32_t;

/// A component or its negation. Ordered by component, negative first.
struct Literal {
  ComponentIndex component = 0;
  bool positive = true;

  Literal negated() const noexcept { return {component, !positive}; }
  /// Truth value of the literal under `state[component]`.
  bool holds(std::uint8_t value) const noexcept { return (value != 0) == positive; }

  friend auto operator<=>(const Literal &, const Literal &) = default;
};

constexpr std::size_t default_clause_cap = 1'000'000;

/// Canonical disjunctive normal form.
///
/// Well formed: no clause contains complementary literals and no clause's
/// literal set includes another's. Literals inside a clause and the clauses
/// themselves are sorted, so equal functions built the same way compare equal.
/// No clause is constant false; a single empty clause is constant true.
class Dnf {
public:
  using Clause = std::vector<Literal>;

  /// Constant false.
  Dnf() = default;

  static Dnf constant(bool value);
  static Dnf literal(Literal lit);
  /// Canonicalizes arbitrary clauses; throws CapacityError above `cap` clauses.
  static Dnf from_clauses(std::vector<Clause> clauses, std::size_t cap = default_clause_cap);

  const std::vector<Clause> &clauses() const noexcept { return clauses_; }
  std::size_t size() const noexcept { return clauses_.size(); }
  bool is_false() const noexcept { return clauses_.empty(); }
  bool is_true() const noexcept { return clauses_.size() == 1 && clauses_.front().empty(); }
  bool is_constant() const noexcept { return is_false() || is_true(); }

  /// Sorted distinct components mentioned by some literal.
  std::vector<ComponentIndex> support() const;

  /// `state[i]` is the 0/1 value of component i.
  bool evaluate(std::span<const std::uint8_t> state) const;

  /// Checks the well-formedness invariants (used by tests).
  bool is_well_formed() const;

  friend bool operator==(const Dnf &, const Dnf &) = default;

private:
  std::vector<Clause> clauses_;
};

Dnf dnf_or(const Dnf &lhs, const Dnf &rhs, std::size_t cap = default_clause_cap);
Dnf dnf_and(const Dnf &lhs, const Dnf &rhs, std::size_t cap = default_clause_cap);

/// Distributes `expr` into canonical DNF. `resolve` maps a variable name to its
/// component index.
Dnf to_dnf(const Expression &expr,
           const std::function<ComponentIndex(const std::string &)> &resolve,
           std::size_t cap = default_clause_cap);

/// Renders with `&`, `|`, `!`; multi-literal clauses are parenthesized when
/// there is more than one clause. `names[i]` names component i.
std::string render_dnf(const Dnf &dnf, std::span<const std::string> names);

} // namespace bnkit
