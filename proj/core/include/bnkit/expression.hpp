#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bnkit {

/// Propositional formula over component names, as written in a model file.
///
/// The tree is kept exactly as parsed (no simplification); conjunctions and
/// disjunctions are k-ary, so `a & b & c` is a single node with three children.
struct Expression {
  enum class Kind { variable, constant, negation, conjunction, disjunction };

  Kind kind = Kind::constant;
  std::string name;  // variable
  bool value = false; // constant
  std::vector<Expression> children;

  static Expression variable(std::string name);
  static Expression constant(bool value);
  static Expression negation(Expression operand);
  static Expression conjunction(std::vector<Expression> operands);
  static Expression disjunction(std::vector<Expression> operands);

  friend bool operator==(const Expression &, const Expression &) = default;
};

/// Parses one formula. Grammar: `!`/`not` binds tighter than `&`/`and`, which
/// binds tighter than `|`/`or`; constants `0 1 true false`; identifiers are
/// `[A-Za-z0-9_]+` other than the (case-insensitive) reserved words.
///
/// `line` and `column_offset` only shift the positions reported in ParseError.
Expression parse_expression(std::string_view text, std::size_t line = 1,
                            std::size_t column_offset = 0);

/// True for `and or not true false` in any letter case.
bool is_reserved_word(std::string_view word);

/// True when `word` is usable as a component name.
bool is_valid_identifier(std::string_view word);

/// Names referenced by the expression, in first-occurrence order, without
/// duplicates.
std::vector<std::string> referenced_names(const Expression &expr);

/// Renders with full parenthesization of nested operators; parses back to an
/// equal tree.
std::string to_string(const Expression &expr);

/// Direct evaluation; `lookup` maps a variable name to its value.
template <typename Lookup> bool evaluate_expression(const Expression &expr, Lookup &&lookup) {
  switch (expr.kind) {
  case Expression::Kind::variable:
    return lookup(expr.name);
  case Expression::Kind::constant:
    return expr.value;
  case Expression::Kind::negation:
    return !evaluate_expression(expr.children.front(), lookup);
  case Expression::Kind::conjunction:
    for (const auto &child : expr.children)
      if (!evaluate_expression(child, lookup))
        return false;
    return true;
  case Expression::Kind::disjunction:
    for (const auto &child : expr.children)
      if (evaluate_expression(child, lookup))
        return true;
    return false;
  }
  return false;
}

} // namespace bnkit
