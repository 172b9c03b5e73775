#include "doctest.h"

#include "bnkit/closure.hpp"
#include "bnkit/error.hpp"
#include "bnkit/solver.hpp"
#include "oracle.hpp"

#include <chrono>
#include <set>

using namespace bnkit;

namespace {

const BooleanNetwork &example() {
  static const BooleanNetwork net = parse_bnet(oracle::worked_example);
  return net;
}

Cube C(std::string_view s) { return Cube::parse(s); }

std::set<Cube> as_set(const std::vector<Cube> &v) { return {v.begin(), v.end()}; }
std::set<State> as_set(const std::vector<State> &v) { return {v.begin(), v.end()}; }

std::set<std::string> strings(const std::vector<Cube> &v) {
  std::set<std::string> out;
  for (const auto &c : v)
    out.insert(c.to_string());
  return out;
}

std::set<std::string> strings(const std::vector<State> &v) {
  std::set<std::string> out;
  for (const auto &x : v)
    out.insert(x.to_string());
  return out;
}

using Set = std::set<std::string>;

} // namespace

TEST_CASE("fixed points of the worked example") {
  auto all = enumerate_fixed_points(example());
  CHECK(strings(collect(all)) == Set{"100"});
  auto inside = enumerate_fixed_points(example(), C("01*"));
  CHECK(collect(inside).empty());
  const auto id = parse_bnet("x1, x1\nx2, x2");
  auto four = enumerate_fixed_points(id);
  CHECK(strings(collect(four)) == Set{"00", "01", "10", "11"});
}

TEST_CASE("minimal trap spaces of the worked example") {
  auto all = enumerate_minimal_trap_spaces(example());
  CHECK(strings(collect(all)) == Set{"01*", "100"});
  auto fp = enumerate_minimal_trap_spaces(example(), C("100"));
  CHECK(strings(collect(fp)) == Set{"100"});
  auto a1 = enumerate_minimal_trap_spaces(example(), parse_cube("a=1", example()));
  CHECK(strings(collect(a1)) == Set{"100"});
  const auto swap = parse_bnet("x1, x2\nx2, x1");
  auto two = enumerate_minimal_trap_spaces(swap);
  CHECK(strings(collect(two)) == Set{"00", "11"});
}

TEST_CASE("maximal trap spaces of the worked example") {
  auto all = enumerate_maximal_trap_spaces(example());
  CHECK(strings(collect(all)) == Set{"10*", "01*"});
  const auto id = parse_bnet("x, x");
  auto singletons = enumerate_maximal_trap_spaces(id);
  CHECK(strings(collect(singletons)) == Set{"0", "1"});
  auto inside = enumerate_maximal_trap_spaces(example(), C("01*"));
  CHECK(strings(collect(inside)) == Set{"01*"});
}

TEST_CASE("count_solutions") {
  CHECK(count_solutions(example(), {Problem::minimal_trap_spaces, {}, {}}) == 2);
  CHECK(count_solutions(example(), {Problem::fixed_points, {}, {}}) == 1);
  CHECK(count_solutions(example(), {Problem::maximal_trap_spaces, {}, {}}) == 2);
  const auto empty = parse_bnet("");
  CHECK(count_solutions(empty, {Problem::fixed_points, {}, {}}) == 1);
  CHECK(count_solutions(empty, {Problem::minimal_trap_spaces, {}, {}}) == 1);
  CHECK(count_solutions(empty, {Problem::maximal_trap_spaces, {}, {}}) == 0);
}

TEST_CASE("constant components") {
  const auto net = parse_bnet("a, 1\nb, a & !c\nc, 0");
  auto fp = enumerate_fixed_points(net);
  CHECK(strings(collect(fp)) == Set{"110"});
  auto mx = enumerate_maximal_trap_spaces(net);
  CHECK(strings(collect(mx)) == Set{"1**", "**0"});
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(enumerate_minimal_trap_spaces(example(), C("01")), DimensionError);
  CHECK_THROWS_AS(enumerate_fixed_points(example(), std::nullopt, 0), Error);
}

TEST_CASE("limit gives a prefix") {
  auto one = enumerate_fixed_points(example(), std::nullopt, 1);
  CHECK(strings(collect(one)) == Set{"100"});
  const auto id = parse_bnet("x1, x1\nx2, x2\nx3, x3");
  auto full = enumerate_fixed_points(id);
  const auto all = collect(full);
  for (std::size_t k = 1; k <= 9; ++k) {
    auto part = enumerate_fixed_points(id, std::nullopt, k);
    const auto got = collect(part);
    CHECK(got.size() == std::min<std::size_t>(k, 8));
    CHECK(std::equal(got.begin(), got.end(), all.begin()));
  }
}

TEST_CASE("streams are anytime and reproducible") {
  const auto net = oracle::random_network(17, 7);
  auto a = enumerate_minimal_trap_spaces(net);
  auto b = enumerate_minimal_trap_spaces(net);
  CHECK(collect(a) == collect(b));
  SolverOptions other;
  other.seed = 12345;
  auto c = enumerate_minimal_trap_spaces(net, std::nullopt, std::nullopt, other);
  auto d = enumerate_minimal_trap_spaces(net);
  CHECK(as_set(collect(c)) == as_set(collect(d)));
}

TEST_CASE("expired deadline throws TimeoutError") {
  SolverOptions opts;
  opts.deadline = sat::Clock::now() - std::chrono::seconds(1);
  const auto net = oracle::random_network(3, 7);
  auto s = enumerate_minimal_trap_spaces(net, std::nullopt, std::nullopt, opts);
  CHECK_THROWS_AS(s.next(), TimeoutError);
}

TEST_CASE("property: enumerations match the brute-force oracle") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const auto net = seed % 2 ? oracle::with_xor(seed, n) : oracle::random_network(seed, n);
    const Cube full(n);
    auto fp = enumerate_fixed_points(net);
    const auto fps = collect(fp);
    CHECK(as_set(fps).size() == fps.size());
    CHECK(as_set(fps) == oracle::fixed_points(net, full));
    auto mn = enumerate_minimal_trap_spaces(net);
    const auto mins = collect(mn);
    CHECK(as_set(mins).size() == mins.size());
    CHECK(as_set(mins) == oracle::minimal_trap_spaces(net, full));
    auto mx = enumerate_maximal_trap_spaces(net);
    const auto maxs = collect(mx);
    CHECK(as_set(maxs).size() == maxs.size());
    CHECK(as_set(maxs) == oracle::maximal_trap_spaces(net, full));
  }
}

TEST_CASE("property: restricted enumerations match the oracle") {
  std::mt19937_64 rng(21);
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const auto net = oracle::with_xor(seed * 31, n);
    Cube within(n);
    for (std::size_t i = 0; i < n; ++i)
      if (rng() % 3 == 0)
        within.fix(i, rng() % 2);
    auto fp = enumerate_fixed_points(net, within);
    CHECK(as_set(collect(fp)) == oracle::fixed_points(net, within));
    auto mn = enumerate_minimal_trap_spaces(net, within);
    CHECK(as_set(collect(mn)) == oracle::minimal_trap_spaces(net, within));
    auto mx = enumerate_maximal_trap_spaces(net, within);
    CHECK(as_set(collect(mx)) == oracle::maximal_trap_spaces(net, within));
  }
}

TEST_CASE("property: reversed branching gives the same sets") {
  SolverOptions reversed;
  reversed.reverse_branching = true;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto net = oracle::with_xor(seed + 500, 2 + seed % 5);
    for (auto kind : {Problem::fixed_points, Problem::minimal_trap_spaces,
                      Problem::maximal_trap_spaces}) {
      SolutionStream a(net, {kind, {}, {}});
      SolutionStream b(net, {kind, {}, {}}, reversed);
      CHECK(as_set(collect(a)) == as_set(collect(b)));
    }
  }
}

TEST_CASE("property: minimal trap spaces are pairwise disjoint and contain the fixed points") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto net = oracle::with_xor(seed + 900, 3 + seed % 5);
    auto mn = enumerate_minimal_trap_spaces(net);
    const auto mins = collect(mn);
    for (std::size_t i = 0; i < mins.size(); ++i) {
      CHECK(is_trap_space(net, mins[i]));
      for (std::size_t j = i + 1; j < mins.size(); ++j)
        CHECK_FALSE(intersect(mins[i], mins[j]).has_value());
    }
    auto fp = enumerate_fixed_points(net);
    const auto min_set = as_set(mins);
    for (const State &x : collect(fp))
      CHECK(min_set.count(Cube::from_state(x)) == 1);
  }
}

TEST_CASE("property: limited runs are prefixes of the full run") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto net = oracle::random_network(seed + 77, 6);
    for (auto kind : {Problem::fixed_points, Problem::minimal_trap_spaces,
                      Problem::maximal_trap_spaces}) {
      SolutionStream full(net, {kind, {}, {}});
      const auto all = collect(full);
      for (std::size_t k = 1; k <= all.size() + 1; ++k) {
        SolutionStream part(net, {kind, {}, k});
        const auto got = collect(part);
        REQUIRE(got.size() == std::min(k, all.size()));
        CHECK(std::equal(got.begin(), got.end(), all.begin()));
        CHECK(part.emitted() == got.size());
      }
    }
  }
}
