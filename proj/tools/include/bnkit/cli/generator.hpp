#pragma once

#include "bnkit/network.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace bnkit::cli {

enum class Family { inhibitor_dominant, nested_canalizing_unate };

std::string_view to_string(Family family);
Family parse_family(std::string_view text);

/// Random network recipe. In-degrees follow P(k) ~ k^-gamma on
/// [1, max_in_degree]; regulators are drawn by preferential attachment on
/// out-degree.
///
/// inhibitor-dominant: each edge is an activator or an inhibitor and
///   f_i = (a_1 | ... | a_p) & !(h_1 | ... | h_q), either part dropped when
///   empty.
/// nested-canalizing-unate: f_i = l_1 o_1 (l_2 o_2 (... l_k)) with a random
///   sign per literal and random operators.
struct GenSpec {
  std::size_t nodes = 100;
  double gamma = 2.5;
  std::size_t max_in_degree = 16;
  double activator_ratio = 0.5;
  Family family = Family::inhibitor_dominant;
  std::uint64_t seed = 1;
};

/// Deterministic for a given spec on every platform: sampling uses only the
/// raw output of std::mt19937_64.
std::string generate_bnet(const GenSpec &spec);
BooleanNetwork generate_network(const GenSpec &spec);

} // namespace bnkit::cli
