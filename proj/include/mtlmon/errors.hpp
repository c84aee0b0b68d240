#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mtlmon {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntervalError : public Error {
 public:
  using Error::Error;
};

/// Timestamps went backwards (corrupt trace, not user error).
class MonotonicityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class EmptyTraceError : public Error {
 public:
  using Error::Error;
};

class UnboundPropositionError : public Error {
 public:
  explicit UnboundPropositionError(const std::string& atom)
      : Error("proposition '" + atom + "' is not bound to a predicate"),
        atom_(atom) {}

  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

class UnknownVariableError : public Error {
 public:
  using Error::Error;
};

class TypeMismatchError : public Error {
 public:
  using Error::Error;
};

class TraceIndexError : public Error {
 public:
  using Error::Error;
};

class ResidualCeilingError : public Error {
 public:
  using Error::Error;
};

/// Monitor-run failure annotated with requirement name and event index.
class RunError : public Error {
 public:
  using Error::Error;
};

}  // namespace mtlmon
