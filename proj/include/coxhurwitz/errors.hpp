#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxhurwitz {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed Coxeter matrix or other input that cannot describe a valid object.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Scalars from different fields, or a Coxeter entry that does not divide L.
class ConfigurationError : public Error {
public:
  using Error::Error;
};

/// Division by zero in the scalar field.
class ArithmeticError : public Error {
public:
  using Error::Error;
};

/// An operation applied outside its domain (e.g. the root of a non-reflection).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A caller-side precondition was violated.
class ContractError : public Error {
public:
  using Error::Error;
};

/// A configured search budget was exhausted before the answer was certain.
class BudgetError : public Error {
public:
  using Error::Error;
};

/// The requested computation is not supported for this input (e.g. infinite W).
class UnsupportedError : public Error {
public:
  using Error::Error;
};

/// A mathematical guarantee failed; indicates a bug, never bad input.
class InternalError : public Error {
public:
  using Error::Error;
};

/// Group-file syntax error carrying the 1-based line number.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace coxhurwitz
