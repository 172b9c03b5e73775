#pragma once

#include "bnkit/cube.hpp"
#include "bnkit/network.hpp"

#include <span>

namespace bnkit {

/// Set of values `fn` takes over the vertices of a cube.
///
/// True side: some clause has every literal compatible with the cube. False
/// side: for unate functions, every clause has a literal whose negation is
/// compatible; otherwise some BDD path to the false leaf is compatible.
///
/// The mask overload accepts value sets that are empty for some components;
/// the result is then the set of values guaranteed for every completion, which
/// is what incremental propagation needs.
ValueSet eval_on_cube(const NodeFunction &fn, std::span<const std::uint8_t> masks);
ValueSet eval_on_cube(const NodeFunction &fn, const Cube &c);

/// Smallest trap space containing `c`.
Cube closure(const BooleanNetwork &net, const Cube &c);
Cube closure(const BooleanNetwork &net, const State &x);

bool is_trap_space(const BooleanNetwork &net, const Cube &c);

/// f(x).
State apply(const BooleanNetwork &net, const State &x);
bool is_fixed_point(const BooleanNetwork &net, const State &x);

} // namespace bnkit
