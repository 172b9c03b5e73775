#include "bnkit/dnf.hpp"

#include "bnkit/error.hpp"

#include <algorithm>

namespace bnkit {

namespace {

// Sorts and deduplicates literals; returns false when the clause contains a
// literal and its negation.
bool normalize_clause(Dnf::Clause &clause) {
  std::sort(clause.begin(), clause.end());
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  for (std::size_t i = 1; i < clause.size(); ++i)
    if (clause[i].component == clause[i - 1].component)
      return false;
  return true;
}

void check_cap(std::size_t count, std::size_t cap) {
  if (count > cap)
    throw CapacityError("DNF exceeds " + std::to_string(cap) + " clauses");
}

// Removes duplicates and subsumed clauses from normalized clauses.
std::vector<Dnf::Clause> remove_subsumed(std::vector<Dnf::Clause> clauses) {
  std::sort(clauses.begin(), clauses.end(), [](const Dnf::Clause &a, const Dnf::Clause &b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  });
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());

  std::vector<Dnf::Clause> kept;
  kept.reserve(clauses.size());
  for (auto &candidate : clauses) {
    if (!kept.empty() && kept.front().empty())
      break; // constant true absorbs everything
    bool subsumed = false;
    for (const auto &smaller : kept) {
      if (smaller.size() >= candidate.size())
        break;
      if (std::includes(candidate.begin(), candidate.end(), smaller.begin(), smaller.end())) {
        subsumed = true;
        break;
      }
    }
    if (!subsumed)
      kept.push_back(std::move(candidate));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

Dnf dnf_of(const Expression &expr, bool negate,
           const std::function<ComponentIndex(const std::string &)> &resolve, std::size_t cap) {
  using Kind = Expression::Kind;
  switch (expr.kind) {
  case Kind::variable:
    return Dnf::literal({resolve(expr.name), !negate});
  case Kind::constant:
    return Dnf::constant(expr.value != negate);
  case Kind::negation:
    return dnf_of(expr.children.front(), !negate, resolve, cap);
  case Kind::conjunction:
  case Kind::disjunction: {
    const bool as_and = (expr.kind == Kind::conjunction) != negate;
    Dnf acc = Dnf::constant(as_and);
    for (const auto &child : expr.children) {
      Dnf part = dnf_of(child, negate, resolve, cap);
      acc = as_and ? dnf_and(acc, part, cap) : dnf_or(acc, part, cap);
      if (as_and ? acc.is_false() : acc.is_true())
        break;
    }
    return acc;
  }
  }
  return {};
}

} // namespace

Dnf Dnf::constant(bool value) {
  Dnf dnf;
  if (value)
    dnf.clauses_.emplace_back();
  return dnf;
}

Dnf Dnf::literal(Literal lit) {
  Dnf dnf;
  dnf.clauses_.push_back({lit});
  return dnf;
}

Dnf Dnf::from_clauses(std::vector<Clause> clauses, std::size_t cap) {
  std::vector<Clause> consistent;
  consistent.reserve(clauses.size());
  for (auto &clause : clauses)
    if (normalize_clause(clause))
      consistent.push_back(std::move(clause));
  check_cap(consistent.size(), cap);
  Dnf dnf;
  dnf.clauses_ = remove_subsumed(std::move(consistent));
  return dnf;
}

std::vector<ComponentIndex> Dnf::support() const {
  std::vector<ComponentIndex> out;
  for (const auto &clause : clauses_)
    for (const auto &lit : clause)
      out.push_back(lit.component);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Dnf::evaluate(std::span<const std::uint8_t> state) const {
  return std::any_of(clauses_.begin(), clauses_.end(), [&](const Clause &clause) {
    return std::all_of(clause.begin(), clause.end(),
                       [&](const Literal &lit) { return lit.holds(state[lit.component]); });
  });
}

bool Dnf::is_well_formed() const {
  for (const auto &clause : clauses_) {
    if (!std::is_sorted(clause.begin(), clause.end()))
      return false;
    for (std::size_t i = 1; i < clause.size(); ++i)
      if (clause[i].component == clause[i - 1].component)
        return false;
  }
  for (std::size_t i = 0; i < clauses_.size(); ++i)
    for (std::size_t j = 0; j < clauses_.size(); ++j)
      if (i != j && std::includes(clauses_[j].begin(), clauses_[j].end(), clauses_[i].begin(),
                                  clauses_[i].end()))
        return false;
  return std::is_sorted(clauses_.begin(), clauses_.end());
}

Dnf dnf_or(const Dnf &lhs, const Dnf &rhs, std::size_t cap) {
  if (lhs.is_true() || rhs.is_false())
    return lhs;
  if (rhs.is_true() || lhs.is_false())
    return rhs;
  std::vector<Dnf::Clause> clauses = lhs.clauses();
  clauses.insert(clauses.end(), rhs.clauses().begin(), rhs.clauses().end());
  return Dnf::from_clauses(std::move(clauses), cap);
}

Dnf dnf_and(const Dnf &lhs, const Dnf &rhs, std::size_t cap) {
  if (lhs.is_false() || rhs.is_true())
    return lhs;
  if (rhs.is_false() || lhs.is_true())
    return rhs;
  std::vector<Dnf::Clause> clauses;
  Dnf::Clause merged;
  for (const auto &a : lhs.clauses()) {
    for (const auto &b : rhs.clauses()) {
      merged.clear();
      std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
      if (!normalize_clause(merged))
        continue;
      clauses.push_back(merged);
      check_cap(clauses.size(), cap);
    }
  }
  return Dnf::from_clauses(std::move(clauses), cap);
}

Dnf to_dnf(const Expression &expr,
           const std::function<ComponentIndex(const std::string &)> &resolve, std::size_t cap) {
  return dnf_of(expr, false, resolve, cap);
}

std::string render_dnf(const Dnf &dnf, std::span<const std::string> names) {
  if (dnf.is_false())
    return "0";
  if (dnf.is_true())
    return "1";
  const bool parenthesize = dnf.size() > 1;
  std::string out;
  for (std::size_t c = 0; c < dnf.size(); ++c) {
    const auto &clause = dnf.clauses()[c];
    if (c > 0)
      out += " | ";
    const bool wrap = parenthesize && clause.size() > 1;
    if (wrap)
      out += '(';
    for (std::size_t l = 0; l < clause.size(); ++l) {
      if (l > 0)
        out += " & ";
      if (!clause[l].positive)
        out += '!';
      out += names[clause[l].component];
    }
    if (wrap)
      out += ')';
  }
  return out;
}

} // namespace bnkit
