#include "doctest.h"

#include "bnkit/bdd.hpp"
#include "bnkit/error.hpp"
#include "bnkit/network.hpp"
#include "oracle.hpp"

#include <random>

using namespace bnkit;

namespace {

Literal pos(ComponentIndex i) { return {i, true}; }
Literal neg(ComponentIndex i) { return {i, false}; }

std::unordered_map<std::string, ComponentIndex> index_map(std::initializer_list<std::string> names) {
  std::unordered_map<std::string, ComponentIndex> out;
  ComponentIndex k = 0;
  for (const auto &name : names)
    out.emplace(name, k++);
  return out;
}

} // namespace

TEST_CASE("parse_expression builds the tree as written") {
  const Expression e = parse_expression("A | !(C & D)");
  CHECK(e == Expression::disjunction(
                 {Expression::variable("A"),
                  Expression::negation(Expression::conjunction(
                      {Expression::variable("C"), Expression::variable("D")}))}));
  CHECK(parse_expression("1") == Expression::constant(true));
  CHECK(parse_expression("a & !a") ==
        Expression::conjunction({Expression::variable("a"),
                                 Expression::negation(Expression::variable("a"))}));
}

TEST_CASE("parse_expression handles words, constants and precedence") {
  CHECK(parse_expression("a AND NOT b or c") ==
        parse_expression("(a & !b) | c"));
  CHECK(parse_expression("true") == Expression::constant(true));
  CHECK(parse_expression("False") == Expression::constant(false));
  CHECK(parse_expression("0") == Expression::constant(false));
  CHECK(parse_expression("a & b & c").children.size() == 3);
  CHECK(parse_expression("x_1 | 2b").kind == Expression::Kind::disjunction);
}

TEST_CASE("parse_expression reports positions") {
  try {
    parse_expression("a & (b | c", 4);
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 4);
    CHECK(e.column() > 0);
  }
  CHECK_THROWS_AS(parse_expression(""), ParseError);
  CHECK_THROWS_AS(parse_expression("a &"), ParseError);
  CHECK_THROWS_AS(parse_expression("a $ b"), ParseError);
  try {
    parse_expression("a & and");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("reserved word") != std::string::npos);
  }
}

TEST_CASE("parse_bnet reads the worked example") {
  const auto net = parse_bnet(oracle::worked_example);
  REQUIRE(net.size() == 3);
  CHECK(net.names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(net.function(0).dnf().clauses() == std::vector<Dnf::Clause>{{neg(1)}});
  CHECK(net.function(1).dnf().clauses() == std::vector<Dnf::Clause>{{neg(0)}});
  CHECK(net.function(2).dnf().clauses() ==
        std::vector<Dnf::Clause>{{neg(0), neg(2)}, {pos(1), neg(2)}});
  CHECK(net.function(2).is_unate());
  CHECK(net.function(2).bdd() == nullptr);
}

TEST_CASE("parse_bnet edge cases") {
  CHECK(parse_bnet("").size() == 0);
  const auto id = parse_bnet("x, x");
  REQUIRE(id.size() == 1);
  CHECK(id.function(0).dnf() == Dnf::literal(pos(0)));
  const auto crlf = parse_bnet("# model\r\nTargets , Factors\r\na, b # comment\r\n\r\nb, a\r\n");
  CHECK(crlf.names() == std::vector<std::string>{"a", "b"});
  CHECK(parse_bnet("b, a\na, 1") .function(1).dnf().is_true());
}

TEST_CASE("parse_bnet errors") {
  CHECK_THROWS_AS(parse_bnet("a, b\na, !b\nb, a"), ModelError);
  CHECK_THROWS_AS(parse_bnet("a, e"), ModelError);
  try {
    parse_bnet("a, a\nb, a &\n");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_bnet("a b"), ParseError);
  CHECK_THROWS_AS(parse_bnet("and, 1"), ParseError);
}

TEST_CASE("normalize produces canonical DNFs") {
  const auto names = index_map({"x1", "x2", "x3"});
  const auto f3 = normalize(parse_expression("!(x1 & !x2) & !x3"), names);
  CHECK(f3.dnf().clauses() == std::vector<Dnf::Clause>{{neg(0), neg(2)}, {pos(1), neg(2)}});
  CHECK(f3.is_unate());

  const auto ab = index_map({"a", "b"});
  const auto x = normalize(parse_expression("(a & !b) | (!a & b)"), ab);
  CHECK(x.dnf().size() == 2);
  CHECK_FALSE(x.is_unate());
  REQUIRE(x.bdd() != nullptr);
  CHECK(x.bdd()->is_reduced_ordered());

  CHECK(normalize(parse_expression("a | (a & b)"), ab).dnf().clauses() ==
        std::vector<Dnf::Clause>{{pos(0)}});
  CHECK(normalize(parse_expression("a & !a"), ab).dnf().is_false());
  // Subsumption only: a tautology with two clauses keeps both, and its BDD
  // is the true leaf.
  const auto taut = normalize(parse_expression("a | !a"), ab);
  CHECK(taut.dnf().size() == 2);
  REQUIRE(taut.bdd() != nullptr);
  CHECK(taut.bdd()->root() == Bdd::true_leaf);
  CHECK_THROWS_AS(normalize(parse_expression("q"), ab), ModelError);
}

TEST_CASE("clause cap raises CapacityError") {
  // (a0|b0) & (a1|b1) & ... has 2^k clauses.
  std::string text;
  for (int i = 0; i < 12; ++i) {
    if (i)
      text += " & ";
    text += "(a" + std::to_string(i) + " | b" + std::to_string(i) + ")";
  }
  std::unordered_map<std::string, ComponentIndex> names;
  for (int i = 0; i < 12; ++i) {
    names.emplace("a" + std::to_string(i), 2 * i);
    names.emplace("b" + std::to_string(i), 2 * i + 1);
  }
  CHECK(normalize(parse_expression(text), names).dnf().size() == 4096);
  CHECK_THROWS_AS(normalize(parse_expression(text), names, 1000), CapacityError);
}

TEST_CASE("set_function edits and validates") {
  const auto net = parse_bnet(oracle::worked_example);
  const auto edited = set_function(net, "b", "!a | c");
  CHECK(edited.function(1).dnf().clauses() == std::vector<Dnf::Clause>{{neg(0)}, {pos(2)}});
  CHECK(edited.names() == net.names());
  CHECK(set_function(net, "c", "!(a & !b) & !c") == net);
  CHECK_THROWS_AS(set_function(net, "d", "e"), ModelError);
  const auto grown = set_function(net, "d", "a & !d");
  CHECK(grown.size() == 4);
  CHECK(grown.name(3) == "d");
  CHECK(grown.dependents(0) == std::vector<ComponentIndex>{1, 2, 3});
}

TEST_CASE("export_bnet") {
  const auto net = parse_bnet(oracle::worked_example);
  CHECK(export_bnet(net) == "targets, factors\na, !b\nb, !a\nc, (!a & !c) | (b & !c)\n");
  CHECK(export_bnet(parse_bnet("")) == "targets, factors\n");
  CHECK(export_bnet(parse_bnet("t, 1\nf, 0")) == "targets, factors\nt, 1\nf, 0\n");
  CHECK(export_bnet(parse_bnet("a, b & a\nb, a")) == "targets, factors\na, a & b\nb, a\n");
}

TEST_CASE("evaluate") {
  const auto net = parse_bnet(oracle::worked_example);
  CHECK(evaluate(net.function(2), State::parse("000").values()));
  CHECK_FALSE(evaluate(net.function(0), State::parse("010").values()));
  const auto f = parse_bnet("a, 0");
  CHECK_FALSE(evaluate(f.function(0), State::parse("1").values()));
}

TEST_CASE("property: DNF agrees with the source expression") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto net = oracle::random_network(seed, 6, 4);
    for (ComponentIndex i = 0; i < net.size(); ++i) {
      const auto &fn = net.function(i);
      CHECK(fn.dnf().is_well_formed());
      CHECK(fn.is_unate() == (fn.bdd() == nullptr));
      for (const State &x : oracle::all_states(net.size())) {
        const bool want = oracle::eval_source(net, i, x);
        CHECK(fn.dnf().evaluate(x.values()) == want);
        if (fn.bdd())
          CHECK(fn.bdd()->evaluate(x.values()) == want);
      }
    }
  }
}

TEST_CASE("property: unate flag is the both-signs test") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto net = oracle::random_network(seed * 7, 5);
    for (ComponentIndex i = 0; i < net.size(); ++i) {
      std::set<std::pair<ComponentIndex, bool>> seen;
      for (const auto &clause : net.function(i).dnf().clauses())
        for (const auto &lit : clause)
          seen.emplace(lit.component, lit.positive);
      bool mixed = false;
      for (const auto &[c, s] : seen)
        mixed = mixed || seen.count({c, !s});
      CHECK(net.function(i).is_unate() == !mixed);
    }
  }
}

TEST_CASE("property: BDD is reduced, ordered and exact on wide supports") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 40; ++round) {
    std::vector<std::pair<std::string, Expression>> defs;
    std::vector<std::string> names;
    for (int i = 0; i < 12; ++i)
      names.push_back("v" + std::to_string(i));
    auto expr = oracle::random_expression(rng, names, 4);
    defs.emplace_back("v0", std::move(expr));
    for (int i = 1; i < 12; ++i)
      defs.emplace_back(names[i], Expression::variable(names[i]));
    const auto net = BooleanNetwork::from_expressions(std::move(defs));
    const auto &fn = net.function(0);
    if (!fn.bdd())
      continue;
    CHECK(fn.bdd()->is_reduced_ordered());
    for (const State &x : oracle::all_states(12))
      REQUIRE(fn.bdd()->evaluate(x.values()) == fn.dnf().evaluate(x.values()));
  }
}

TEST_CASE("property: export parse export is a fixpoint") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto net = oracle::random_network(seed, 7);
    const std::string once = export_bnet(net);
    const auto back = parse_bnet(once);
    CHECK(back == net);
    CHECK(export_bnet(back) == once);
  }
}

TEST_CASE("property: declaration order is stable under edits") {
  std::mt19937_64 rng(5);
  auto net = parse_bnet(oracle::worked_example);
  std::vector<std::string> order = net.names();
  for (int step = 0; step < 50; ++step) {
    const std::string name = rng() % 4 == 0 ? "n" + std::to_string(step) : order[rng() % order.size()];
    const std::string ref = order[rng() % order.size()];
    net = set_function(net, name, "!" + ref + " | " + name);
    if (std::find(order.begin(), order.end(), name) == order.end())
      order.push_back(name);
    REQUIRE(net.names() == order);
    for (ComponentIndex i = 0; i < net.size(); ++i)
      CHECK(net.function(i).dnf().is_well_formed());
  }
}
