#include "bnkit/bdd.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace bnkit {

namespace {

constexpr ComponentIndex leaf_level = std::numeric_limits<ComponentIndex>::max();

struct TripleHash {
  std::size_t operator()(const std::tuple<ComponentIndex, Bdd::NodeId, Bdd::NodeId> &t) const {
    auto [c, lo, hi] = t;
    std::uint64_t h = (static_cast<std::uint64_t>(c) * 0x9E3779B97F4A7C15ULL) ^
                      (static_cast<std::uint64_t>(lo) << 32 | hi);
    h ^= h >> 29;
    return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ULL);
  }
};

struct PairHash {
  std::size_t operator()(const std::pair<Bdd::NodeId, Bdd::NodeId> &p) const {
    std::uint64_t h = static_cast<std::uint64_t>(p.first) << 32 | p.second;
    h ^= h >> 31;
    return static_cast<std::size_t>(h * 0x94D049BB133111EBULL);
  }
};

} // namespace

// Construction-time tables; dropped once the diagram is built.
struct Bdd::Builder {
  std::unordered_map<std::tuple<ComponentIndex, NodeId, NodeId>, NodeId, TripleHash> unique;
  std::unordered_map<std::pair<NodeId, NodeId>, NodeId, PairHash> or_cache;
};

Bdd::Bdd() {
  nodes_.push_back({leaf_level, false_leaf, false_leaf});
  nodes_.push_back({leaf_level, true_leaf, true_leaf});
}

Bdd::NodeId Bdd::make(Builder &builder, ComponentIndex component, NodeId low, NodeId high) {
  if (low == high)
    return low;
  auto key = std::make_tuple(component, low, high);
  auto [it, inserted] = builder.unique.try_emplace(key, static_cast<NodeId>(nodes_.size()));
  if (inserted)
    nodes_.push_back({component, low, high});
  return it->second;
}

Bdd::NodeId Bdd::disjoin(Builder &builder, NodeId a, NodeId b) {
  if (a == true_leaf || b == true_leaf)
    return true_leaf;
  if (a == false_leaf || a == b)
    return b;
  if (b == false_leaf)
    return a;
  if (a > b)
    std::swap(a, b);
  auto &cache = builder.or_cache;
  if (auto it = cache.find({a, b}); it != cache.end())
    return it->second;
  const ComponentIndex ca = nodes_[a].component;
  const ComponentIndex cb = nodes_[b].component;
  const ComponentIndex top = std::min(ca, cb);
  const NodeId a_lo = ca == top ? nodes_[a].low : a;
  const NodeId a_hi = ca == top ? nodes_[a].high : a;
  const NodeId b_lo = cb == top ? nodes_[b].low : b;
  const NodeId b_hi = cb == top ? nodes_[b].high : b;
  const NodeId low = disjoin(builder, a_lo, b_lo);
  const NodeId high = disjoin(builder, a_hi, b_hi);
  const NodeId result = make(builder, top, low, high);
  cache.emplace(std::make_pair(a, b), result);
  return result;
}

Bdd Bdd::from_dnf(const Dnf &dnf) {
  Bdd bdd;
  Builder builder;
  NodeId acc = false_leaf;
  for (const auto &clause : dnf.clauses()) {
    // Literals are sorted by component, so build the conjunction bottom-up.
    NodeId term = true_leaf;
    for (auto it = clause.rbegin(); it != clause.rend(); ++it)
      term = it->positive ? bdd.make(builder, it->component, false_leaf, term)
                          : bdd.make(builder, it->component, term, false_leaf);
    acc = bdd.disjoin(builder, acc, term);
  }
  bdd.root_ = acc;
  return bdd;
}

std::size_t Bdd::size() const {
  std::unordered_set<NodeId> seen;
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    if (is_leaf(id) || !seen.insert(id).second)
      continue;
    stack.push_back(nodes_[id].low);
    stack.push_back(nodes_[id].high);
  }
  return seen.size();
}

bool Bdd::evaluate(std::span<const std::uint8_t> state) const {
  NodeId id = root_;
  while (!is_leaf(id))
    id = state[nodes_[id].component] != 0 ? nodes_[id].high : nodes_[id].low;
  return id == true_leaf;
}

bool Bdd::reaches(NodeId leaf, std::span<const std::uint8_t> allowed) const {
  if (is_leaf(root_))
    return root_ == leaf;
  // Depth-first over the DAG; every inner node is expanded at most once.
  std::vector<NodeId> stack{root_};
  std::vector<bool> seen(nodes_.size(), false);
  seen[root_] = true;
  while (!stack.empty()) {
    const Node &n = nodes_[stack.back()];
    stack.pop_back();
    const std::uint8_t mask = allowed[n.component];
    for (int value = 0; value < 2; ++value) {
      if ((mask & (1u << value)) == 0)
        continue;
      const NodeId child = value != 0 ? n.high : n.low;
      if (child == leaf)
        return true;
      if (is_leaf(child) || seen[child])
        continue;
      seen[child] = true;
      stack.push_back(child);
    }
  }
  return false;
}

bool Bdd::is_reduced_ordered() const {
  std::unordered_set<NodeId> seen;
  std::unordered_set<std::tuple<ComponentIndex, NodeId, NodeId>, TripleHash> triples;
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    if (is_leaf(id) || !seen.insert(id).second)
      continue;
    const Node &n = nodes_[id];
    if (n.low == n.high)
      return false;
    if (!triples.insert({n.component, n.low, n.high}).second)
      return false;
    for (NodeId child : {n.low, n.high}) {
      if (!is_leaf(child) && nodes_[child].component <= n.component)
        return false;
      stack.push_back(child);
    }
  }
  return true;
}

} // namespace bnkit
