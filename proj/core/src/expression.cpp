#include "bnkit/expression.hpp"

#include "bnkit/error.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace bnkit {

namespace {

std::string format_position(const std::string &message, std::size_t line, std::size_t column) {
  std::string out = "line " + std::to_string(line);
  if (column > 0)
    out += ", column " + std::to_string(column);
  return out + ": " + message;
}

std::string lowercase(std::string_view word) {
  std::string out(word);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

enum class TokenKind { identifier, constant, op_not, op_and, op_or, lparen, rparen, end };

struct Token {
  TokenKind kind;
  std::string text;
  bool value = false;
  std::size_t column;
};

class Tokenizer {
public:
  Tokenizer(std::string_view text, std::size_t line, std::size_t column_offset)
      : text_(text), line_(line), offset_(column_offset) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text_.size()) {
      const char c = text_[i];
      const std::size_t column = offset_ + i + 1;
      if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        ++i;
      } else if (c == '!') {
        tokens.push_back({TokenKind::op_not, std::string(1, c), false, column});
        ++i;
      } else if (c == '&') {
        tokens.push_back({TokenKind::op_and, "&", false, column});
        ++i;
      } else if (c == '|') {
        tokens.push_back({TokenKind::op_or, "|", false, column});
        ++i;
      } else if (c == '(') {
        tokens.push_back({TokenKind::lparen, "(", false, column});
        ++i;
      } else if (c == ')') {
        tokens.push_back({TokenKind::rparen, ")", false, column});
        ++i;
      } else if (is_identifier_char(c)) {
        std::size_t j = i;
        while (j < text_.size() && is_identifier_char(text_[j]))
          ++j;
        tokens.push_back(classify(text_.substr(i, j - i), column));
        i = j;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", line_, column);
      }
    }
    tokens.push_back({TokenKind::end, "", false, offset_ + text_.size() + 1});
    return tokens;
  }

private:
  static Token classify(std::string_view word, std::size_t column) {
    const std::string lower = lowercase(word);
    if (lower == "not")
      return {TokenKind::op_not, std::string(word), false, column};
    if (lower == "and")
      return {TokenKind::op_and, std::string(word), false, column};
    if (lower == "or")
      return {TokenKind::op_or, std::string(word), false, column};
    if (lower == "true" || word == "1")
      return {TokenKind::constant, std::string(word), true, column};
    if (lower == "false" || word == "0")
      return {TokenKind::constant, std::string(word), false, column};
    return {TokenKind::identifier, std::string(word), false, column};
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
};

class Parser {
public:
  Parser(std::vector<Token> tokens, std::size_t line) : tokens_(std::move(tokens)), line_(line) {}

  Expression run() {
    Expression expr = parse_or();
    if (peek().kind != TokenKind::end)
      fail("unexpected '" + peek().text + "'");
    return expr;
  }

private:
  const Token &peek() const { return tokens_[pos_]; }
  const Token &advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string &message) const {
    throw ParseError(message, line_, peek().column);
  }

  Expression parse_or() {
    std::vector<Expression> operands;
    operands.push_back(parse_and());
    while (peek().kind == TokenKind::op_or) {
      advance();
      operands.push_back(parse_and());
    }
    if (operands.size() == 1)
      return std::move(operands.front());
    return Expression::disjunction(std::move(operands));
  }

  Expression parse_and() {
    std::vector<Expression> operands;
    operands.push_back(parse_unary());
    while (peek().kind == TokenKind::op_and) {
      advance();
      operands.push_back(parse_unary());
    }
    if (operands.size() == 1)
      return std::move(operands.front());
    return Expression::conjunction(std::move(operands));
  }

  Expression parse_unary() {
    if (peek().kind == TokenKind::op_not) {
      advance();
      return Expression::negation(parse_unary());
    }
    return parse_primary();
  }

  Expression parse_primary() {
    const Token &token = peek();
    switch (token.kind) {
    case TokenKind::identifier:
      advance();
      return Expression::variable(token.text);
    case TokenKind::constant:
      advance();
      return Expression::constant(token.value);
    case TokenKind::lparen: {
      advance();
      Expression inner = parse_or();
      if (peek().kind != TokenKind::rparen)
        fail("expected ')'");
      advance();
      return inner;
    }
    case TokenKind::op_and:
    case TokenKind::op_or:
      if (std::isalpha(static_cast<unsigned char>(token.text.front())) != 0)
        fail("reserved word '" + token.text + "' used as identifier");
      fail("unexpected '" + token.text + "'");
    case TokenKind::rparen:
      fail("unexpected ')'");
    case TokenKind::end:
      fail("unexpected end of expression");
    case TokenKind::op_not:
      break;
    }
    fail("unexpected token");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

void collect_names(const Expression &expr, std::vector<std::string> &out,
                   std::unordered_set<std::string> &seen) {
  if (expr.kind == Expression::Kind::variable) {
    if (seen.insert(expr.name).second)
      out.push_back(expr.name);
    return;
  }
  for (const auto &child : expr.children)
    collect_names(child, out, seen);
}

} // namespace

ParseError::ParseError(const std::string &message, std::size_t line, std::size_t column)
    : Error(format_position(message, line, column)), detail_(message), line_(line),
      column_(column) {}

Expression Expression::variable(std::string name) {
  Expression e;
  e.kind = Kind::variable;
  e.name = std::move(name);
  return e;
}

Expression Expression::constant(bool value) {
  Expression e;
  e.kind = Kind::constant;
  e.value = value;
  return e;
}

Expression Expression::negation(Expression operand) {
  Expression e;
  e.kind = Kind::negation;
  e.children.push_back(std::move(operand));
  return e;
}

Expression Expression::conjunction(std::vector<Expression> operands) {
  Expression e;
  e.kind = Kind::conjunction;
  e.children = std::move(operands);
  return e;
}

Expression Expression::disjunction(std::vector<Expression> operands) {
  Expression e;
  e.kind = Kind::disjunction;
  e.children = std::move(operands);
  return e;
}

bool is_reserved_word(std::string_view word) {
  const std::string lower = lowercase(word);
  return lower == "and" || lower == "or" || lower == "not" || lower == "true" || lower == "false";
}

bool is_valid_identifier(std::string_view word) {
  if (word.empty() || word == "0" || word == "1" || is_reserved_word(word))
    return false;
  return std::all_of(word.begin(), word.end(), is_identifier_char);
}

Expression parse_expression(std::string_view text, std::size_t line, std::size_t column_offset) {
  Tokenizer tokenizer(text, line, column_offset);
  std::vector<Token> tokens = tokenizer.run();
  if (tokens.size() == 1)
    throw ParseError("empty expression", line, column_offset + 1);
  return Parser(std::move(tokens), line).run();
}

std::vector<std::string> referenced_names(const Expression &expr) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  collect_names(expr, out, seen);
  return out;
}

std::string to_string(const Expression &expr) {
  switch (expr.kind) {
  case Expression::Kind::variable:
    return expr.name;
  case Expression::Kind::constant:
    return expr.value ? "1" : "0";
  case Expression::Kind::negation: {
    const Expression &child = expr.children.front();
    const bool atomic =
        child.kind == Expression::Kind::variable || child.kind == Expression::Kind::constant ||
        child.kind == Expression::Kind::negation;
    return atomic ? "!" + to_string(child) : "!(" + to_string(child) + ")";
  }
  case Expression::Kind::conjunction:
  case Expression::Kind::disjunction: {
    const char *op = expr.kind == Expression::Kind::conjunction ? " & " : " | ";
    std::string out;
    for (std::size_t i = 0; i < expr.children.size(); ++i) {
      const Expression &child = expr.children[i];
      if (i > 0)
        out += op;
      const bool nested = child.kind == Expression::Kind::conjunction ||
                          child.kind == Expression::Kind::disjunction;
      out += nested ? "(" + to_string(child) + ")" : to_string(child);
    }
    return out;
  }
  }
  return {};
}

} // namespace bnkit
