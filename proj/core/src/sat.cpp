#include "bnkit/sat.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace bnkit::sat {

namespace {

constexpr double var_decay = 0.95;
constexpr double clause_decay = 0.999;
constexpr std::uint64_t restart_unit = 100;

// Luby sequence value for index i (0-based), scaled by base y.
double luby(double y, std::uint64_t x) {
  std::uint64_t size = 1;
  std::uint32_t seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, seq);
}

} // namespace

Var Solver::new_var(bool preferred_phase, double initial_activity) {
  const Var v = static_cast<Var>(assigns_.size());
  assigns_.push_back(0);
  polarity_.push_back(preferred_phase);
  activity_.push_back(initial_activity);
  level_.push_back(0);
  reason_.push_back(no_reason);
  seen_.push_back(0);
  watches_.emplace_back();
  watches_.emplace_back();
  heap_pos_.push_back(-1);
  heap_insert(v);
  return v;
}

bool Solver::add_clause(std::span<const Lit> input) {
  if (!ok_)
    return false;
  assert(decision_level() == 0);
  std::vector<Lit> lits(input.begin(), input.end());
  std::sort(lits.begin(), lits.end(), [](Lit a, Lit b) { return a.code < b.code; });
  std::vector<Lit> kept;
  kept.reserve(lits.size());
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i > 0 && lits[i] == lits[i - 1])
      continue;
    if (i > 0 && lits[i] == ~lits[i - 1])
      return true; // tautology
    const std::int8_t v = value(lits[i]);
    if (v > 0)
      return true; // satisfied at level 0
    if (v < 0)
      continue;
    kept.push_back(lits[i]);
  }
  if (kept.empty()) {
    ok_ = false;
    return false;
  }
  if (kept.size() == 1) {
    enqueue(kept.front(), no_reason);
    if (propagate() != no_reason) {
      ok_ = false;
      return false;
    }
    return true;
  }
  attach(std::move(kept), false);
  return true;
}

std::uint32_t Solver::attach(std::vector<Lit> lits, bool learnt) {
  const auto cref = static_cast<std::uint32_t>(clauses_.size());
  Clause c;
  c.lits = std::move(lits);
  c.learnt = learnt;
  watches_[(~c.lits[0]).code].push_back({cref, c.lits[1]});
  watches_[(~c.lits[1]).code].push_back({cref, c.lits[0]});
  clauses_.push_back(std::move(c));
  if (learnt)
    learnts_.push_back(cref);
  return cref;
}

void Solver::enqueue(Lit l, std::uint32_t reason) {
  assert(value(l) == 0);
  const Var v = l.var();
  assigns_[v] = l.negative() ? -1 : 1;
  level_[v] = decision_level();
  reason_[v] = reason;
  trail_.push_back(l);
}

std::uint32_t Solver::propagate() {
  std::uint32_t conflict = no_reason;
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    auto &ws = watches_[p.code];
    const Lit false_lit = ~p;
    std::size_t i = 0;
    std::size_t j = 0;
    const std::size_t end = ws.size();
    while (i < end) {
      Watcher w = ws[i++];
      Clause &c = clauses_[w.cref];
      if (c.deleted)
        continue;
      if (value(w.blocker) > 0) {
        ws[j++] = w;
        continue;
      }
      if (c.lits[0] == false_lit)
        std::swap(c.lits[0], c.lits[1]);
      const Lit first = c.lits[0];
      if (first != w.blocker && value(first) > 0) {
        ws[j++] = {w.cref, first};
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.lits.size(); ++k) {
        if (value(c.lits[k]) >= 0) {
          std::swap(c.lits[1], c.lits[k]);
          watches_[(~c.lits[1]).code].push_back({w.cref, first});
          moved = true;
          break;
        }
      }
      if (moved)
        continue;
      ws[j++] = {w.cref, first};
      if (value(first) < 0) {
        conflict = w.cref;
        qhead_ = trail_.size();
        while (i < end)
          ws[j++] = ws[i++];
      } else {
        enqueue(first, w.cref);
      }
    }
    ws.resize(j);
    if (conflict != no_reason)
      break;
  }
  return conflict;
}

bool Solver::redundant(Lit l, std::uint32_t abstract_levels) {
  analyze_stack_.clear();
  analyze_stack_.push_back(l);
  const std::size_t top = analyze_clear_.size();
  while (!analyze_stack_.empty()) {
    const Lit q = analyze_stack_.back();
    analyze_stack_.pop_back();
    const Clause &c = clauses_[reason_[q.var()]];
    for (std::size_t k = 1; k < c.lits.size(); ++k) {
      const Lit r = c.lits[k];
      const Var v = r.var();
      if (seen_[v] || level_[v] == 0)
        continue;
      if (reason_[v] != no_reason && (abstract_levels & (1u << (level_[v] & 31))) != 0) {
        seen_[v] = 1;
        analyze_stack_.push_back(r);
        analyze_clear_.push_back(v);
      } else {
        for (std::size_t m = top; m < analyze_clear_.size(); ++m)
          seen_[analyze_clear_[m]] = 0;
        analyze_clear_.resize(top);
        return false;
      }
    }
  }
  return true;
}

void Solver::analyze(std::uint32_t conflict, std::vector<Lit> &learnt,
                     std::uint32_t &backtrack_level) {
  learnt.clear();
  learnt.push_back(Lit{}); // placeholder for the asserting literal
  int path_count = 0;
  Lit p{};
  bool have_p = false;
  std::size_t index = trail_.size();

  do {
    Clause &c = clauses_[conflict];
    if (c.learnt)
      bump_clause(c);
    // Reason clauses keep the implied literal at position 0.
    for (std::size_t k = have_p ? 1 : 0; k < c.lits.size(); ++k) {
      const Lit q = c.lits[k];
      const Var v = q.var();
      if (seen_[v] || level_[v] == 0)
        continue;
      bump_var(v);
      seen_[v] = 1;
      if (level_[v] >= decision_level())
        ++path_count;
      else
        learnt.push_back(q);
    }
    while (!seen_[trail_[--index].var()]) {
    }
    p = trail_[index];
    have_p = true;
    conflict = reason_[p.var()];
    seen_[p.var()] = 0;
    --path_count;
  } while (path_count > 0);
  learnt[0] = ~p;

  // Drop literals implied by the rest of the clause.
  analyze_clear_.clear();
  for (std::size_t k = 1; k < learnt.size(); ++k)
    analyze_clear_.push_back(learnt[k].var());
  std::uint32_t abstract_levels = 0;
  for (std::size_t k = 1; k < learnt.size(); ++k)
    abstract_levels |= 1u << (level_[learnt[k].var()] & 31);
  std::size_t kept = 1;
  for (std::size_t k = 1; k < learnt.size(); ++k) {
    const Var v = learnt[k].var();
    if (reason_[v] == no_reason || !redundant(learnt[k], abstract_levels))
      learnt[kept++] = learnt[k];
  }
  learnt.resize(kept);
  for (Var v : analyze_clear_)
    seen_[v] = 0;

  if (learnt.size() == 1) {
    backtrack_level = 0;
  } else {
    std::size_t max_i = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k)
      if (level_[learnt[k].var()] > level_[learnt[max_i].var()])
        max_i = k;
    std::swap(learnt[1], learnt[max_i]);
    backtrack_level = level_[learnt[1].var()];
  }
}

void Solver::cancel_until(std::uint32_t level) {
  if (decision_level() <= level)
    return;
  for (std::size_t k = trail_.size(); k > trail_lim_[level]; --k) {
    const Var v = trail_[k - 1].var();
    polarity_[v] = assigns_[v] > 0;
    assigns_[v] = 0;
    reason_[v] = no_reason;
    if (heap_pos_[v] < 0)
      heap_insert(v);
  }
  trail_.resize(trail_lim_[level]);
  qhead_ = trail_.size();
  trail_lim_.resize(level);
}

std::optional<Lit> Solver::pick_branch() {
  while (!heap_.empty()) {
    const Var v = heap_pop();
    if (assigns_[v] == 0)
      return Lit::make(v, !polarity_[v]);
  }
  return std::nullopt;
}

bool Solver::locked(std::uint32_t cref) const {
  const Clause &c = clauses_[cref];
  const Var v = c.lits[0].var();
  return assigns_[v] != 0 && reason_[v] == cref;
}

void Solver::reduce_learnts() {
  std::vector<std::uint32_t> live;
  live.reserve(learnts_.size());
  for (std::uint32_t cref : learnts_)
    if (!clauses_[cref].deleted)
      live.push_back(cref);
  std::sort(live.begin(), live.end(), [&](std::uint32_t a, std::uint32_t b) {
    const Clause &ca = clauses_[a];
    const Clause &cb = clauses_[b];
    if (ca.lbd != cb.lbd)
      return ca.lbd > cb.lbd;
    return ca.activity < cb.activity;
  });
  const std::size_t drop = live.size() / 2;
  std::vector<std::uint32_t> kept;
  for (std::size_t k = 0; k < live.size(); ++k) {
    Clause &c = clauses_[live[k]];
    if (k < drop && c.lbd > 2 && c.lits.size() > 2 && !locked(live[k])) {
      c.deleted = true;
      c.lits.clear();
      c.lits.shrink_to_fit();
    } else {
      kept.push_back(live[k]);
    }
  }
  learnts_ = std::move(kept);
}

Result Solver::search(std::uint64_t conflict_budget, std::span<const Lit> assumptions,
                      const std::optional<Clock::time_point> &deadline) {
  std::uint64_t local_conflicts = 0;
  std::vector<Lit> learnt;
  std::uint64_t poll = 0;
  for (;;) {
    if (deadline && (++poll & 255u) == 0 && Clock::now() > *deadline)
      return Result::unknown;

    const std::uint32_t conflict = propagate();
    if (conflict != no_reason) {
      ++conflicts_;
      ++local_conflicts;
      if (decision_level() == 0) {
        ok_ = false;
        return Result::unsat;
      }
      std::uint32_t backtrack_level = 0;
      analyze(conflict, learnt, backtrack_level);
      cancel_until(backtrack_level);
      if (learnt.size() == 1) {
        enqueue(learnt.front(), no_reason);
      } else {
        std::uint32_t lbd = 0;
        {
          std::vector<std::uint32_t> levels;
          for (Lit l : learnt)
            levels.push_back(level_[l.var()]);
          std::sort(levels.begin(), levels.end());
          lbd = static_cast<std::uint32_t>(std::unique(levels.begin(), levels.end()) - levels.begin());
        }
        const std::uint32_t cref = attach(learnt, true);
        clauses_[cref].lbd = lbd;
        bump_clause(clauses_[cref]);
        enqueue(learnt.front(), cref);
      }
      var_inc_ /= var_decay;
      clause_inc_ /= clause_decay;
      continue;
    }

    if (local_conflicts >= conflict_budget) {
      cancel_until(0);
      return Result::unknown;
    }
    if (static_cast<double>(learnts_.size()) - static_cast<double>(trail_.size()) >= max_learnts_)
      reduce_learnts();

    std::optional<Lit> next;
    while (decision_level() < assumptions.size()) {
      const Lit a = assumptions[decision_level()];
      const std::int8_t v = value(a);
      if (v > 0) {
        trail_lim_.push_back(static_cast<std::uint32_t>(trail_.size()));
      } else if (v < 0) {
        return Result::unsat;
      } else {
        next = a;
        break;
      }
    }
    if (!next) {
      next = pick_branch();
      if (!next)
        return Result::sat;
      ++decisions_;
    }
    trail_lim_.push_back(static_cast<std::uint32_t>(trail_.size()));
    enqueue(*next, no_reason);
  }
}

Result Solver::solve(std::span<const Lit> assumptions,
                     std::optional<Clock::time_point> deadline) {
  if (!ok_)
    return Result::unsat;
  if (deadline && Clock::now() > *deadline)
    return Result::unknown;
  max_learnts_ = std::max(10000.0, static_cast<double>(clauses_.size()) / 3.0);
  Result status = Result::unknown;
  for (std::uint64_t restart = 0; status == Result::unknown; ++restart) {
    const auto budget = static_cast<std::uint64_t>(luby(2.0, restart) * restart_unit);
    status = search(budget, assumptions, deadline);
    if (status == Result::unknown && deadline && Clock::now() > *deadline)
      break;
    max_learnts_ *= 1.05;
  }
  if (status == Result::sat)
    model_ = assigns_;
  cancel_until(0);
  return status;
}

void Solver::bump_var(Var v) {
  activity_[v] += var_inc_;
  if (activity_[v] > 1e100) {
    for (double &a : activity_)
      a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  if (heap_pos_[v] >= 0)
    heap_up(static_cast<std::size_t>(heap_pos_[v]));
}

void Solver::bump_clause(Clause &c) {
  c.activity += clause_inc_;
  if (c.activity > 1e20) {
    for (std::uint32_t cref : learnts_)
      clauses_[cref].activity *= 1e-20;
    clause_inc_ *= 1e-20;
  }
}

void Solver::heap_insert(Var v) {
  heap_pos_[v] = static_cast<std::int64_t>(heap_.size());
  heap_.push_back(v);
  heap_up(heap_.size() - 1);
}

void Solver::heap_up(std::size_t pos) {
  const Var v = heap_[pos];
  while (pos > 0) {
    const std::size_t parent = (pos - 1) / 2;
    if (!heap_less(v, heap_[parent]))
      break;
    heap_[pos] = heap_[parent];
    heap_pos_[heap_[pos]] = static_cast<std::int64_t>(pos);
    pos = parent;
  }
  heap_[pos] = v;
  heap_pos_[v] = static_cast<std::int64_t>(pos);
}

void Solver::heap_down(std::size_t pos) {
  const Var v = heap_[pos];
  const std::size_t size = heap_.size();
  for (;;) {
    std::size_t child = 2 * pos + 1;
    if (child >= size)
      break;
    if (child + 1 < size && heap_less(heap_[child + 1], heap_[child]))
      ++child;
    if (!heap_less(heap_[child], v))
      break;
    heap_[pos] = heap_[child];
    heap_pos_[heap_[pos]] = static_cast<std::int64_t>(pos);
    pos = child;
  }
  heap_[pos] = v;
  heap_pos_[v] = static_cast<std::int64_t>(pos);
}

Var Solver::heap_pop() {
  const Var top = heap_.front();
  heap_pos_[top] = -1;
  const Var last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_pos_[last] = 0;
    heap_down(0);
  }
  return top;
}

} // namespace bnkit::sat
