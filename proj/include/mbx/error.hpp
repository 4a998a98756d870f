#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mbx {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class FusionMismatch : public Error {
 public:
  using Error::Error;
};

/// A multiplicity that should be a non-negative rational integer was not.
/// Always signals a corrupted character table.
class IntegralityDefect : public Error {
 public:
  using Error::Error;
};

/// Two routes to the same exact quantity disagreed.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

class BurnsideViolation : public Error {
 public:
  using Error::Error;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class MissingInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mbx
