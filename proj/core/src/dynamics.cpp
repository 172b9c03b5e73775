#include "bnkit/dynamics.hpp"

#include "bnkit/closure.hpp"
#include "bnkit/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace bnkit {

namespace {

char mp_char(MpValue v) {
  switch (v) {
  case MpValue::zero:
    return '0';
  case MpValue::one:
    return '1';
  case MpValue::increasing:
    return 'u';
  case MpValue::decreasing:
    return 'd';
  }
  return '?';
}

// Packs an extended state into 2 bits per component.
std::uint64_t pack(const ExtendedState &s) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    code |= static_cast<std::uint64_t>(s[i]) << (2 * i);
  return code;
}

ExtendedState unpack(std::uint64_t code, std::size_t n) {
  ExtendedState s(n);
  for (std::size_t i = 0; i < n; ++i)
    s.set(i, static_cast<MpValue>((code >> (2 * i)) & 3u));
  return s;
}

void check_mp_cap(const BooleanNetwork &net, std::size_t cap) {
  if (net.size() > cap || net.size() > 32)
    throw CapacityError("most permissive search limited to " + std::to_string(std::min<std::size_t>(cap, 32)) +
                        " components, network has " + std::to_string(net.size()));
}

// Visits every extended state reachable from `start`.
template <typename Visit>
void mp_explore(const BooleanNetwork &net, const ExtendedState &start, Visit &&visit) {
  std::unordered_set<std::uint64_t> seen;
  std::deque<std::uint64_t> queue;
  const std::uint64_t first = pack(start);
  seen.insert(first);
  queue.push_back(first);
  while (!queue.empty()) {
    const ExtendedState s = unpack(queue.front(), net.size());
    queue.pop_front();
    if (!visit(s))
      return;
    for (const auto &t : mp_successors(net, s)) {
      const std::uint64_t code = pack(t);
      if (seen.insert(code).second)
        queue.push_back(code);
    }
  }
}

Stg assemble(std::string mode, const std::vector<std::string> &labels,
             const std::vector<std::vector<std::string>> &targets) {
  Stg stg;
  stg.mode = std::move(mode);
  stg.nodes = labels;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < labels.size(); ++k)
    index.emplace(labels[k], k);
  for (std::size_t k = 0; k < labels.size(); ++k)
    for (const auto &t : targets[k])
      if (auto it = index.find(t); it != index.end() && it->second != k)
        stg.edges.emplace_back(k, it->second);
  std::sort(stg.edges.begin(), stg.edges.end());
  stg.edges.erase(std::unique(stg.edges.begin(), stg.edges.end()), stg.edges.end());
  return stg;
}

Cube restriction_or_full(const BooleanNetwork &net, const std::optional<Cube> &restrict_to) {
  if (!restrict_to)
    return Cube::full(net.size());
  if (restrict_to->size() != net.size())
    throw DimensionError("restriction cube length does not match network size");
  return *restrict_to;
}

} // namespace

std::string_view to_string(UpdateMode mode) {
  switch (mode) {
  case UpdateMode::synchronous:
    return "synchronous";
  case UpdateMode::asynchronous:
    return "asynchronous";
  case UpdateMode::general:
    return "general";
  case UpdateMode::most_permissive:
    return "mp";
  }
  return "";
}

UpdateMode parse_update_mode(std::string_view text) {
  if (text == "synchronous" || text == "sync")
    return UpdateMode::synchronous;
  if (text == "asynchronous" || text == "async")
    return UpdateMode::asynchronous;
  if (text == "general")
    return UpdateMode::general;
  if (text == "mp" || text == "most-permissive")
    return UpdateMode::most_permissive;
  throw Error("unknown update mode '" + std::string(text) + "'");
}

ExtendedState ExtendedState::from_state(const State &x) {
  ExtendedState s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    s.set(i, x[i] ? MpValue::one : MpValue::zero);
  return s;
}

ExtendedState ExtendedState::parse(std::string_view text) {
  ExtendedState s(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
    case '0':
      s.set(i, MpValue::zero);
      break;
    case '1':
      s.set(i, MpValue::one);
      break;
    case 'u':
      s.set(i, MpValue::increasing);
      break;
    case 'd':
      s.set(i, MpValue::decreasing);
      break;
    default:
      throw Error(std::string("invalid extended state character '") + text[i] + "'");
    }
  }
  return s;
}

bool ExtendedState::is_binary() const noexcept {
  return std::all_of(values_.begin(), values_.end(),
                     [](MpValue v) { return v == MpValue::zero || v == MpValue::one; });
}

Cube ExtendedState::gamma() const {
  Cube c(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == MpValue::zero)
      c.fix(i, false);
    else if (values_[i] == MpValue::one)
      c.fix(i, true);
  }
  return c;
}

std::string ExtendedState::to_string() const {
  std::string out(values_.size(), '0');
  for (std::size_t i = 0; i < values_.size(); ++i)
    out[i] = mp_char(values_[i]);
  return out;
}

std::vector<State> successors(const BooleanNetwork &net, const State &x, UpdateMode mode) {
  if (x.size() != net.size())
    throw DimensionError("state length does not match network size");
  const State image = apply(net, x);
  std::vector<std::size_t> disagreeing;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (image[i] != x[i])
      disagreeing.push_back(i);
  std::vector<State> out;
  if (disagreeing.empty())
    return out;
  switch (mode) {
  case UpdateMode::synchronous:
    out.push_back(image);
    break;
  case UpdateMode::asynchronous:
    for (std::size_t i : disagreeing) {
      State y = x;
      y.flip(i);
      out.push_back(std::move(y));
    }
    break;
  case UpdateMode::general: {
    if (disagreeing.size() > 20)
      throw CapacityError("general update mode limited to 20 simultaneously enabled components");
    const std::uint64_t subsets = std::uint64_t{1} << disagreeing.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      State y = x;
      for (std::size_t k = 0; k < disagreeing.size(); ++k)
        if ((mask >> k) & 1u)
          y.flip(disagreeing[k]);
      out.push_back(std::move(y));
    }
    std::sort(out.begin(), out.end());
    break;
  }
  case UpdateMode::most_permissive:
    throw Error("use mp_successors for the most permissive mode");
  }
  return out;
}

std::vector<ExtendedState> mp_successors(const BooleanNetwork &net, const ExtendedState &s) {
  if (s.size() != net.size())
    throw DimensionError("state length does not match network size");
  const Cube g = s.gamma();
  std::vector<ExtendedState> out;
  for (ComponentIndex i = 0; i < s.size(); ++i) {
    const MpValue v = s[i];
    auto rewrite = [&](MpValue w) {
      ExtendedState t = s;
      t.set(i, w);
      out.push_back(std::move(t));
    };
    if (v == MpValue::increasing)
      rewrite(MpValue::one);
    else if (v == MpValue::decreasing)
      rewrite(MpValue::zero);
    const bool low = v == MpValue::zero || v == MpValue::decreasing;
    const ValueSet reachable = eval_on_cube(net.function(i), g);
    if (low && contains_value(reachable, true))
      rewrite(MpValue::increasing);
    if (!low && contains_value(reachable, false))
      rewrite(MpValue::decreasing);
  }
  return out;
}

std::size_t Stg::out_degree(std::size_t node) const {
  return static_cast<std::size_t>(std::count_if(
      edges.begin(), edges.end(), [&](const auto &e) { return e.first == node; }));
}

Stg build_stg(const BooleanNetwork &net, const std::string &mode_name,
              const SuccessorFunction &successor_fn, const std::optional<Cube> &restrict_to,
              const StgLimits &limits) {
  if (net.size() > limits.boolean_cap)
    throw CapacityError("state transition graph limited to " +
                        std::to_string(limits.boolean_cap) + " components");
  const Cube domain = restriction_or_full(net, restrict_to);
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> targets;
  for (const State &x : vertices(domain, limits.boolean_cap)) {
    labels.push_back(x.to_string());
    std::vector<std::string> next;
    for (const State &y : successor_fn(net, x))
      next.push_back(y.to_string());
    targets.push_back(std::move(next));
  }
  return assemble(mode_name, labels, targets);
}

Stg build_stg(const BooleanNetwork &net, UpdateMode mode, const std::optional<Cube> &restrict_to,
              const StgLimits &limits) {
  if (mode != UpdateMode::most_permissive) {
    return build_stg(
        net, std::string(to_string(mode)),
        [mode](const BooleanNetwork &n, const State &x) { return successors(n, x, mode); },
        restrict_to, limits);
  }
  if (net.size() > limits.mp_cap)
    throw CapacityError("most permissive graph limited to " + std::to_string(limits.mp_cap) +
                        " components");
  const Cube domain = restriction_or_full(net, restrict_to);
  // Per-component choices in label order: 0 < 1 < d < u.
  std::vector<std::vector<MpValue>> choices(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (!contains_value(domain[i], true))
      choices[i] = {MpValue::zero, MpValue::decreasing, MpValue::increasing};
    else if (!contains_value(domain[i], false))
      choices[i] = {MpValue::one, MpValue::decreasing, MpValue::increasing};
    else
      choices[i] = {MpValue::zero, MpValue::one, MpValue::decreasing, MpValue::increasing};
  }
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> targets;
  std::vector<std::size_t> digit(net.size(), 0);
  ExtendedState s(net.size());
  for (;;) {
    for (std::size_t i = 0; i < net.size(); ++i)
      s.set(i, choices[i][digit[i]]);
    labels.push_back(s.to_string());
    std::vector<std::string> next;
    for (const auto &t : mp_successors(net, s))
      next.push_back(t.to_string());
    targets.push_back(std::move(next));
    std::size_t k = net.size();
    while (k > 0) {
      --k;
      if (++digit[k] < choices[k].size())
        break;
      digit[k] = 0;
      if (k == 0) {
        k = net.size() + 1;
        break;
      }
    }
    if (k == net.size() + 1 || net.size() == 0)
      break;
  }
  return assemble("mp", labels, targets);
}

Stg build_mp_projection(const BooleanNetwork &net, const std::optional<Cube> &restrict_to,
                        const StgLimits &limits) {
  if (net.size() > limits.mp_cap)
    throw CapacityError("most permissive graph limited to " + std::to_string(limits.mp_cap) +
                        " components");
  const Cube domain = restriction_or_full(net, restrict_to);
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> targets;
  for (const State &x : vertices(domain, limits.mp_cap)) {
    labels.push_back(x.to_string());
    std::vector<std::string> next;
    for (const State &y : mp_reachable_states(net, x, limits.mp_cap))
      next.push_back(y.to_string());
    targets.push_back(std::move(next));
  }
  return assemble("mp-projection", labels, targets);
}

std::vector<State> mp_reachable_states(const BooleanNetwork &net, const State &x,
                                       std::size_t mp_cap) {
  if (x.size() != net.size())
    throw DimensionError("state length does not match network size");
  check_mp_cap(net, mp_cap);
  std::vector<State> out;
  mp_explore(net, ExtendedState::from_state(x), [&](const ExtendedState &s) {
    if (s.is_binary()) {
      State y(s.size());
      for (std::size_t i = 0; i < s.size(); ++i)
        y.set(i, s[i] == MpValue::one);
      out.push_back(std::move(y));
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool reachability(const BooleanNetwork &net, const State &x, const State &y,
                  const SuccessorFunction &successor_fn) {
  if (x.size() != net.size() || y.size() != net.size())
    throw DimensionError("state length does not match network size");
  if (x == y)
    return true;
  std::set<State> seen{x};
  std::deque<State> queue{x};
  while (!queue.empty()) {
    const State s = std::move(queue.front());
    queue.pop_front();
    for (auto &t : successor_fn(net, s)) {
      if (t == y)
        return true;
      if (seen.insert(t).second)
        queue.push_back(std::move(t));
    }
  }
  return false;
}

bool reachability(const BooleanNetwork &net, const State &x, const State &y, UpdateMode mode,
                  std::size_t mp_cap) {
  if (x.size() != net.size() || y.size() != net.size())
    throw DimensionError("state length does not match network size");
  if (mode != UpdateMode::most_permissive)
    return reachability(net, x, y, [mode](const BooleanNetwork &n, const State &s) {
      return successors(n, s, mode);
    });
  check_mp_cap(net, mp_cap);
  if (x == y)
    return true;
  // Every most permissive trajectory from x stays inside closure(x).
  if (!contains(closure(net, x), y))
    return false;
  const ExtendedState target = ExtendedState::from_state(y);
  bool found = false;
  mp_explore(net, ExtendedState::from_state(x), [&](const ExtendedState &s) {
    found = s == target;
    return !found;
  });
  return found;
}

SolutionStream attractors(const BooleanNetwork &net, const std::optional<State> &reachable_from,
                          std::optional<std::size_t> limit, const SolverOptions &options) {
  std::optional<Cube> within;
  if (reachable_from)
    within = closure(net, *reachable_from);
  return enumerate_minimal_trap_spaces(net, std::move(within), limit, options);
}

InfluenceGraph influence_graph(const BooleanNetwork &net) {
  InfluenceGraph graph;
  for (ComponentIndex target = 0; target < net.size(); ++target) {
    std::set<std::pair<ComponentIndex, Sign>> seen;
    for (const auto &clause : net.function(target).dnf().clauses())
      for (const auto &lit : clause)
        seen.emplace(lit.component, lit.positive ? Sign::positive : Sign::negative);
    for (const auto &[source, sign] : seen)
      graph.edges.push_back({source, sign, target});
  }
  return graph;
}

} // namespace bnkit
