#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bnkit {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in an expression or a .bnet file. Positions are 1-based;
/// a column of 0 means the error concerns the whole line.
class ParseError : public Error {
public:
  ParseError(const std::string &message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// Message without the position prefix.
  const std::string &detail() const noexcept { return detail_; }

private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

/// Inconsistent network: duplicate or undeclared component names.
class ModelError : public Error {
public:
  using Error::Error;
};

/// A configured size cap (clause count, free components, state space) was hit.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// Operands of incompatible dimension.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// A cooperative deadline expired before the computation finished.
class TimeoutError : public Error {
public:
  TimeoutError() : Error("deadline exceeded") {}
};

} // namespace bnkit
