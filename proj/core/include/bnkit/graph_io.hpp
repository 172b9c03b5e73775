#pragma once

#include "bnkit/cube.hpp"
#include "bnkit/dynamics.hpp"
#include "bnkit/network.hpp"

#include <string>
#include <string_view>

namespace bnkit {

/// DOT digraph with nodes labeled by their state strings.
std::string stg_to_dot(const Stg &stg);
/// `{"mode": ..., "nodes": [...], "edges": [[from, to], ...]}` with labels
/// as edge endpoints.
std::string stg_to_json(const Stg &stg);

/// DOT digraph over component names; edges labeled "+" or "-".
std::string influence_to_dot(const InfluenceGraph &graph, const BooleanNetwork &net);
/// `{"nodes": [...], "edges": [{"source", "target", "sign"}, ...]}`.
std::string influence_to_json(const InfluenceGraph &graph, const BooleanNetwork &net);

/// Single-line JSON object mapping each component name, in declaration
/// order, to "0", "1" or "*".
std::string solution_to_json(const Cube &c, const BooleanNetwork &net);
std::string solution_to_json(const State &x, const BooleanNetwork &net);
/// Inverse of solution_to_json. Throws ParseError on malformed input and
/// ModelError when the keys differ from the component names.
Cube solution_from_json(std::string_view text, const BooleanNetwork &net);

} // namespace bnkit
