#include "bnkit/solver.hpp"

#include "bnkit/closure.hpp"
#include "bnkit/error.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <unordered_map>

namespace bnkit {

namespace {

using sat::Lit;
using sat::Var;

// Atom (b, v) is true iff value v belongs to the value set of component b.
// Atoms occupy variables 0 .. 2n-1; auxiliaries follow.
Lit atom(ComponentIndex b, bool v, bool negative = false) {
  return Lit::make(2 * b + (v ? 1u : 0u), negative);
}

// Clause form of the trap-space conditions. For every component i and value
// v: if f_i can take v on the cube described by the atoms, atom (i, v) holds.
// Models are therefore exactly the trap spaces (given non-emptiness), and
// unit propagation performs the closure plus its dual pruning.
class Encoder {
public:
  Encoder(sat::Solver &solver, const BooleanNetwork &net) : solver_(solver), net_(net) {}

  void encode_function(ComponentIndex i) {
    const NodeFunction &fn = net_.function(i);
    const Dnf &dnf = fn.dnf();
    if (dnf.is_false()) {
      solver_.add_clause({atom(i, false)});
      return;
    }
    if (dnf.is_true()) {
      solver_.add_clause({atom(i, true)});
      return;
    }
    std::vector<Lit> lits;
    // True side: a clause whose literals are all available fires (i, 1).
    for (const auto &clause : dnf.clauses()) {
      lits.clear();
      for (const auto &lit : clause)
        lits.push_back(atom(lit.component, lit.positive, true));
      lits.push_back(atom(i, true));
      solver_.add_clause(lits);
    }
    if (fn.is_unate())
      encode_unate_false_side(i, dnf);
    else
      encode_bdd_false_side(i, *fn.bdd());
  }

private:
  // (i, 0) fires when every clause can be falsified, i.e. each clause has a
  // literal whose negation is available.
  void encode_unate_false_side(ComponentIndex i, const Dnf &dnf) {
    std::vector<Lit> fire{atom(i, false)};
    for (const auto &clause : dnf.clauses()) {
      if (clause.size() == 1) {
        const Literal &lit = clause.front();
        fire.push_back(atom(lit.component, !lit.positive, true));
        continue;
      }
      const Var q = solver_.new_var();
      for (const auto &lit : clause)
        solver_.add_clause({atom(lit.component, !lit.positive, true), Lit::make(q)});
      fire.push_back(Lit::make(q, true));
    }
    solver_.add_clause(fire);
  }

  // (i, 0) fires when a path to the false leaf is available.
  void encode_bdd_false_side(ComponentIndex i, const Bdd &bdd) {
    std::unordered_map<Bdd::NodeId, Var> reach;
    std::vector<Bdd::NodeId> order{bdd.root()};
    auto reach_lit = [&](Bdd::NodeId id) {
      auto [it, inserted] = reach.try_emplace(id, 0);
      if (inserted) {
        it->second = solver_.new_var();
        order.push_back(id);
      }
      return Lit::make(it->second);
    };
    for (std::size_t k = 0; k < order.size(); ++k) {
      const Bdd::NodeId id = order[k];
      const Bdd::Node &node = bdd.node(id);
      for (bool value : {false, true}) {
        const Bdd::NodeId child = value ? node.high : node.low;
        if (child == Bdd::true_leaf)
          continue;
        std::vector<Lit> lits;
        if (id != bdd.root())
          lits.push_back(~reach_lit(id));
        lits.push_back(atom(node.component, value, true));
        lits.push_back(child == Bdd::false_leaf ? atom(i, false) : reach_lit(child));
        solver_.add_clause(lits);
      }
    }
  }

  sat::Solver &solver_;
  const BooleanNetwork &net_;
};

Cube cube_from_model(const sat::Solver &solver, std::size_t n) {
  std::vector<ValueSet> values(n);
  for (ComponentIndex b = 0; b < n; ++b) {
    ValueSet v = ValueSet::none;
    if (solver.model_value(atom(b, false)))
      v |= ValueSet::zero;
    if (solver.model_value(atom(b, true)))
      v |= ValueSet::one;
    assert(v != ValueSet::none);
    values[b] = v;
  }
  return Cube::from_value_sets(std::move(values));
}

} // namespace

class SolutionStream::Impl {
public:
  Impl(const BooleanNetwork &net, const Query &query, const SolverOptions &options)
      : net_(net), kind_(query.kind), limit_(query.limit), options_(options),
        rng_(options.seed) {
    const std::size_t n = net.size();
    if (query.within && query.within->size() != n)
      throw DimensionError("restriction cube length does not match network size");
    if (limit_ && *limit_ == 0)
      throw Error("limit must be at least 1");

    // Branching order: components occurring often in DNFs first.
    std::vector<double> occurrences(n, 0.0);
    for (const auto &fn : net.functions())
      for (const auto &clause : fn.dnf().clauses())
        for (const auto &lit : clause)
          occurrences[lit.component] += 1.0;
    const double top = n == 0 ? 0.0 : *std::max_element(occurrences.begin(), occurrences.end());
    std::uniform_real_distribution<double> jitter(0.0, 1e-3);
    const bool prefer_member = kind_ == Problem::maximal_trap_spaces;
    for (ComponentIndex b = 0; b < n; ++b) {
      double score = options.reverse_branching ? top - occurrences[b] : occurrences[b];
      for (int v = 0; v < 2; ++v)
        solver_.new_var(prefer_member, score + jitter(rng_));
    }

    Encoder encoder(solver_, net);
    for (ComponentIndex b = 0; b < n; ++b) {
      solver_.add_clause({atom(b, false), atom(b, true)});
      if (kind_ == Problem::fixed_points)
        solver_.add_clause({atom(b, false, true), atom(b, true, true)});
    }
    for (ComponentIndex i = 0; i < n; ++i)
      encoder.encode_function(i);
    if (query.within)
      for (ComponentIndex b = 0; b < n; ++b)
        if (query.within->is_fixed(b))
          solver_.add_clause({atom(b, !query.within->fixed_value(b), true)});
    if (kind_ == Problem::maximal_trap_spaces) {
      std::vector<Lit> not_full;
      for (ComponentIndex b = 0; b < n; ++b) {
        not_full.push_back(atom(b, false, true));
        not_full.push_back(atom(b, true, true));
      }
      solver_.add_clause(not_full);
    }
  }

  std::optional<Cube> next() {
    if (exhausted_ || (limit_ && emitted_ >= *limit_))
      return std::nullopt;
    if (!solve({})) {
      exhausted_ = true;
      return std::nullopt;
    }
    Cube found = cube_from_model(solver_, net_.size());
    switch (kind_) {
    case Problem::fixed_points:
      break;
    case Problem::minimal_trap_spaces:
      found = descend(std::move(found));
      break;
    case Problem::maximal_trap_spaces:
      found = ascend(std::move(found));
      break;
    }
    block(found);
    ++emitted_;
    return found;
  }

  std::size_t emitted() const noexcept { return emitted_; }

private:
  bool solve(const std::vector<Lit> &assumptions) {
    switch (solver_.solve(assumptions, options_.deadline)) {
    case sat::Result::sat:
      return true;
    case sat::Result::unsat:
      return false;
    case sat::Result::unknown:
      break;
    }
    throw TimeoutError();
  }

  // Closure of one vertex of a trap space is a trap space inside it.
  Cube shrink(const Cube &trap) {
    State x(trap.size());
    for (std::size_t b = 0; b < trap.size(); ++b)
      x.set(b, trap.is_free(b) ? (rng_() & 1u) != 0 : trap.fixed_value(b));
    return closure(net_, x);
  }

  // Replaces the candidate by strictly smaller trap spaces until none exists.
  Cube descend(Cube candidate) {
    candidate = shrink(candidate);
    for (;;) {
      if (candidate.free_count() == 0)
        return candidate;
      const Var act = solver_.new_var();
      std::vector<Lit> smaller{Lit::make(act, true)};
      std::vector<Lit> assumptions{Lit::make(act)};
      for (ComponentIndex b = 0; b < candidate.size(); ++b) {
        if (candidate.is_free(b)) {
          smaller.push_back(atom(b, false, true));
          smaller.push_back(atom(b, true, true));
        } else {
          assumptions.push_back(atom(b, !candidate.fixed_value(b), true));
        }
      }
      solver_.add_clause(smaller);
      const bool found = solve(assumptions);
      solver_.add_clause({Lit::make(act, true)});
      if (!found)
        return candidate;
      Cube inner = cube_from_model(solver_, net_.size());
      assert(subset(inner, candidate) && inner != candidate);
      candidate = shrink(inner);
    }
  }

  // Replaces the candidate by strictly larger trap spaces until none exists.
  Cube ascend(Cube candidate) {
    for (;;) {
      const Var act = solver_.new_var();
      std::vector<Lit> larger{Lit::make(act, true)};
      std::vector<Lit> assumptions{Lit::make(act)};
      for (ComponentIndex b = 0; b < candidate.size(); ++b) {
        for (bool v : {false, true}) {
          if (contains_value(candidate[b], v))
            assumptions.push_back(atom(b, v));
          else
            larger.push_back(atom(b, v));
        }
      }
      solver_.add_clause(larger);
      const bool found = solve(assumptions);
      solver_.add_clause({Lit::make(act, true)});
      if (!found)
        return candidate;
      Cube outer = cube_from_model(solver_, net_.size());
      assert(subset(candidate, outer) && outer != candidate);
      candidate = std::move(outer);
    }
  }

  // Fixed points and minimal trap spaces: exclude every cube meeting the
  // solution (distinct minimal trap spaces are disjoint). Maximal trap
  // spaces: exclude every sub-cube of the solution.
  void block(const Cube &solution) {
    std::vector<Lit> clause;
    for (ComponentIndex b = 0; b < solution.size(); ++b) {
      if (kind_ == Problem::maximal_trap_spaces) {
        for (bool v : {false, true})
          if (!contains_value(solution[b], v))
            clause.push_back(atom(b, v));
      } else if (solution.is_fixed(b)) {
        clause.push_back(atom(b, solution.fixed_value(b), true));
      }
    }
    if (!solver_.add_clause(clause))
      exhausted_ = true;
  }

  const BooleanNetwork &net_;
  Problem kind_;
  std::optional<std::size_t> limit_;
  SolverOptions options_;
  std::mt19937_64 rng_;
  sat::Solver solver_;
  std::size_t emitted_ = 0;
  bool exhausted_ = false;
};

SolutionStream::SolutionStream(const BooleanNetwork &net, const Query &query,
                               const SolverOptions &options)
    : impl_(std::make_unique<Impl>(net, query, options)) {}
SolutionStream::SolutionStream(SolutionStream &&) noexcept = default;
SolutionStream &SolutionStream::operator=(SolutionStream &&) noexcept = default;
SolutionStream::~SolutionStream() = default;

std::optional<Cube> SolutionStream::next() { return impl_->next(); }
std::size_t SolutionStream::emitted() const noexcept { return impl_->emitted(); }

FixedPointStream::FixedPointStream(const BooleanNetwork &net, std::optional<Cube> within,
                                   std::optional<std::size_t> limit,
                                   const SolverOptions &options)
    : stream_(net, Query{Problem::fixed_points, std::move(within), limit}, options) {}

std::optional<State> FixedPointStream::next() {
  auto cube = stream_.next();
  if (!cube)
    return std::nullopt;
  State x(cube->size());
  for (std::size_t b = 0; b < cube->size(); ++b)
    x.set(b, cube->fixed_value(b));
  return x;
}

FixedPointStream enumerate_fixed_points(const BooleanNetwork &net, std::optional<Cube> within,
                                        std::optional<std::size_t> limit,
                                        const SolverOptions &options) {
  return FixedPointStream(net, std::move(within), limit, options);
}

SolutionStream enumerate_minimal_trap_spaces(const BooleanNetwork &net,
                                             std::optional<Cube> within,
                                             std::optional<std::size_t> limit,
                                             const SolverOptions &options) {
  return SolutionStream(net, Query{Problem::minimal_trap_spaces, std::move(within), limit},
                        options);
}

SolutionStream enumerate_maximal_trap_spaces(const BooleanNetwork &net,
                                             std::optional<Cube> within,
                                             std::optional<std::size_t> limit,
                                             const SolverOptions &options) {
  return SolutionStream(net, Query{Problem::maximal_trap_spaces, std::move(within), limit},
                        options);
}

std::vector<Cube> collect(SolutionStream &stream) {
  std::vector<Cube> out;
  while (auto c = stream.next())
    out.push_back(std::move(*c));
  return out;
}

std::vector<State> collect(FixedPointStream &stream) {
  std::vector<State> out;
  while (auto x = stream.next())
    out.push_back(std::move(*x));
  return out;
}

std::size_t count_solutions(const BooleanNetwork &net, const Query &query,
                            const SolverOptions &options) {
  SolutionStream stream(net, query, options);
  std::size_t count = 0;
  while (stream.next())
    ++count;
  return count;
}

} // namespace bnkit
