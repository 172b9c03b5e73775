#include "bnkit/closure.hpp"

#include "bnkit/error.hpp"

#include <algorithm>
#include <deque>

namespace bnkit {

namespace {

bool compatible(const Literal &lit, std::span<const std::uint8_t> masks) {
  return (masks[lit.component] & (lit.positive ? 2u : 1u)) != 0;
}

} // namespace

ValueSet eval_on_cube(const NodeFunction &fn, std::span<const std::uint8_t> masks) {
  const Dnf &dnf = fn.dnf();
  if (dnf.is_false())
    return ValueSet::zero;
  if (dnf.is_true())
    return ValueSet::one;

  ValueSet result = ValueSet::none;
  const bool can_be_true = std::any_of(dnf.clauses().begin(), dnf.clauses().end(), [&](const auto &clause) {
    return std::all_of(clause.begin(), clause.end(),
                       [&](const Literal &lit) { return compatible(lit, masks); });
  });
  if (can_be_true)
    result |= ValueSet::one;

  bool can_be_false;
  if (fn.is_unate()) {
    can_be_false = std::all_of(dnf.clauses().begin(), dnf.clauses().end(), [&](const auto &clause) {
      return std::any_of(clause.begin(), clause.end(),
                         [&](const Literal &lit) { return compatible(lit.negated(), masks); });
    });
  } else {
    can_be_false = fn.bdd()->reaches(Bdd::false_leaf, masks);
  }
  if (can_be_false)
    result |= ValueSet::zero;
  return result;
}

ValueSet eval_on_cube(const NodeFunction &fn, const Cube &c) { return eval_on_cube(fn, c.masks()); }

Cube closure(const BooleanNetwork &net, const Cube &c) {
  if (c.size() != net.size())
    throw DimensionError("cube length does not match network size");
  std::vector<std::uint8_t> masks(c.masks().begin(), c.masks().end());
  const std::size_t n = net.size();
  std::deque<ComponentIndex> queue;
  std::vector<bool> queued(n, true);
  for (ComponentIndex i = 0; i < n; ++i)
    queue.push_back(i);
  while (!queue.empty()) {
    const ComponentIndex i = queue.front();
    queue.pop_front();
    queued[i] = false;
    if (masks[i] == 3)
      continue;
    const auto reached = static_cast<std::uint8_t>(eval_on_cube(net.function(i), masks));
    if ((reached & ~masks[i]) == 0)
      continue;
    masks[i] |= reached;
    for (ComponentIndex dep : net.dependents(i)) {
      if (!queued[dep] && masks[dep] != 3) {
        queued[dep] = true;
        queue.push_back(dep);
      }
    }
  }
  std::vector<ValueSet> values(n);
  for (std::size_t i = 0; i < n; ++i)
    values[i] = static_cast<ValueSet>(masks[i]);
  return Cube::from_value_sets(std::move(values));
}

Cube closure(const BooleanNetwork &net, const State &x) { return closure(net, Cube::from_state(x)); }

bool is_trap_space(const BooleanNetwork &net, const Cube &c) {
  if (c.size() != net.size())
    throw DimensionError("cube length does not match network size");
  for (ComponentIndex i = 0; i < net.size(); ++i) {
    if (c.is_free(i))
      continue;
    if (!is_subset(eval_on_cube(net.function(i), c), c[i]))
      return false;
  }
  return true;
}

State apply(const BooleanNetwork &net, const State &x) {
  if (x.size() != net.size())
    throw DimensionError("state length does not match network size");
  State y(net.size());
  for (ComponentIndex i = 0; i < net.size(); ++i)
    y.set(i, evaluate(net.function(i), x.values()));
  return y;
}

bool is_fixed_point(const BooleanNetwork &net, const State &x) { return apply(net, x) == x; }

} // namespace bnkit
