#pragma once

#include <stdexcept>
#include <string>

namespace signcon {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidWalk : public Error {
 public:
  using Error::Error;
};

class VertexOutOfRange : public Error {
 public:
  using Error::Error;
};

class EdgeOutOfRange : public Error {
 public:
  using Error::Error;
};

/// An operation was called on a graph outside its domain of definition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotSignConnected : public Error {
 public:
  using Error::Error;
};

class NotABlock : public Error {
 public:
  using Error::Error;
};

/// An enumeration passed its configured cap. Never a silent truncation.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class CycleBudgetExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

/// Malformed graph file. `line` is 1-based.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, VertexOutOfRange };

  ParseError(Kind kind, int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  Kind kind_;
  int line_;
};

}  // namespace signcon
