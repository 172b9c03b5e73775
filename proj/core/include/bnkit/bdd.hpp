#pragma once

#include "bnkit/dnf.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace bnkit {

/// Reduced ordered binary decision diagram of a single function.
///
/// Nodes live in an arena owned by the diagram; ids 0 and 1 are the false and
/// true leaves. Variables are tested in increasing component index along
/// every path.
class Bdd {
public:
  using NodeId = std::uint32_t;
  static constexpr NodeId false_leaf = 0;
  static constexpr NodeId true_leaf = 1;

  struct Node {
    ComponentIndex component;
    NodeId low;
    NodeId high;
  };

  /// Constant false.
  Bdd();

  static Bdd from_dnf(const Dnf &dnf);

  NodeId root() const noexcept { return root_; }
  static bool is_leaf(NodeId id) noexcept { return id <= true_leaf; }
  /// Defined for inner nodes only.
  const Node &node(NodeId id) const { return nodes_[id]; }
  /// Inner nodes reachable from the root.
  std::size_t size() const;

  bool evaluate(std::span<const std::uint8_t> state) const;

  /// True iff some root-to-`leaf` path is compatible with `allowed`, where
  /// `allowed[c]` is a bit mask of usable values for component c (bit 0: value
  /// 0, bit 1: value 1). Components with an empty mask block every path.
  bool reaches(NodeId leaf, std::span<const std::uint8_t> allowed) const;

  /// Checks ordering and reduction over the reachable part (used by tests).
  bool is_reduced_ordered() const;

private:
  struct Builder;
  NodeId make(Builder &builder, ComponentIndex component, NodeId low, NodeId high);
  NodeId disjoin(Builder &builder, NodeId a, NodeId b);

  std::vector<Node> nodes_;
  NodeId root_ = false_leaf;
};

} // namespace bnkit
