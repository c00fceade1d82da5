#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kdecomp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects were built over different variable contexts.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// The monomial 1 was offered as a generator, i.e. the ideal would be R.
class ImproperIdealError : public Error {
 public:
  using Error::Error;
};

class NotSquarefreeError : public Error {
 public:
  using Error::Error;
};

class NotAFaceError : public Error {
 public:
  using Error::Error;
};

/// An operation is undefined on a degenerate input (void complex, zero ideal).
class ConventionError : public Error {
 public:
  using Error::Error;
};

class InvalidCertificateError : public Error {
 public:
  using Error::Error;
};

/// An exact computation would exceed its configured size budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// Contracting a vertex would produce the empty edge.
class ImproperContractionError : public Error {
 public:
  using Error::Error;
};

class UnknownVertexError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A cross-check between two independent computations disagreed.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace kdecomp
