#pragma once

#include "bnkit/bdd.hpp"
#include "bnkit/dnf.hpp"
#include "bnkit/expression.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bnkit {

/// One component's update function in normalized form.
///
/// `unate` is the syntactic test: no component occurs with both signs in the
/// DNF. A BDD is attached exactly when the test fails; it serves the
/// false-side evaluation on cubes.
class NodeFunction {
public:
  NodeFunction() = default;
  NodeFunction(Dnf dnf, std::optional<Expression> source = std::nullopt);

  const Dnf &dnf() const noexcept { return dnf_; }
  bool is_unate() const noexcept { return unate_; }
  const Bdd *bdd() const noexcept { return bdd_.get(); }
  /// The expression as written, when the function came from text.
  const std::optional<Expression> &source() const noexcept { return source_; }

  bool evaluate(std::span<const std::uint8_t> state) const { return dnf_.evaluate(state); }

private:
  Dnf dnf_;
  bool unate_ = true;
  std::shared_ptr<const Bdd> bdd_;
  std::optional<Expression> source_;
};

/// Builds the canonical form of `expr`; `index_of` resolves names.
NodeFunction normalize(const Expression &expr,
                       const std::unordered_map<std::string, ComponentIndex> &index_of,
                       std::size_t clause_cap = default_clause_cap);

/// Ordered, named collection of update functions. Component order is the
/// declaration order and never changes under edition.
class BooleanNetwork {
public:
  BooleanNetwork() = default;

  /// Validates names and references, then normalizes every function.
  static BooleanNetwork from_expressions(std::vector<std::pair<std::string, Expression>> defs,
                                         std::size_t clause_cap = default_clause_cap);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::string &name(ComponentIndex i) const { return names_.at(i); }
  const std::vector<std::string> &names() const noexcept { return names_; }
  const NodeFunction &function(ComponentIndex i) const { return functions_.at(i); }
  const std::vector<NodeFunction> &functions() const noexcept { return functions_; }
  std::optional<ComponentIndex> index_of(std::string_view name) const;
  const std::unordered_map<std::string, ComponentIndex> &index_map() const noexcept {
    return index_;
  }

  /// Components whose function reads component `i` (sorted).
  const std::vector<ComponentIndex> &dependents(ComponentIndex i) const {
    return dependents_.at(i);
  }

  /// Sets the function of `name`, appending a new component when needed.
  void set(const std::string &name, const Expression &expr,
           std::size_t clause_cap = default_clause_cap);

  friend bool operator==(const BooleanNetwork &a, const BooleanNetwork &b);

private:
  void rebuild_dependents();

  std::vector<std::string> names_;
  std::vector<NodeFunction> functions_;
  std::unordered_map<std::string, ComponentIndex> index_;
  std::vector<std::vector<ComponentIndex>> dependents_;
};

/// Reads the BooleanNet text format: one `name, expression` per line, `#`
/// comments, optional `targets, factors` header, LF or CRLF line ends.
BooleanNetwork parse_bnet(std::string_view text);
BooleanNetwork load_bnet(const std::string &path);

/// Renders every function from its canonical DNF. The output parses back to
/// a network with identical DNFs, and exporting that again yields the same
/// bytes.
std::string export_bnet(const BooleanNetwork &net);

/// Map-style edition: returns a copy of `net` where `name` has the function
/// given by `expr_text`. Throws ModelError on undeclared references.
BooleanNetwork set_function(const BooleanNetwork &net, const std::string &name,
                            std::string_view expr_text);

/// Value of `fn` at a full state; cross-checks the BDD when present in debug
/// builds.
bool evaluate(const NodeFunction &fn, std::span<const std::uint8_t> state);

} // namespace bnkit
