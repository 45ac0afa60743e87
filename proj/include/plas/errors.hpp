#ifndef PLAS_ERRORS_HPP
#define PLAS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plas {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different symbol contexts.
class ContextError : public Error {
 public:
  using Error::Error;
};

class UnboundSymbolError : public Error {
 public:
  explicit UnboundSymbolError(const std::string& name)
      : Error("unbound symbol '" + name + "'"), symbol_(name) {}
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

/// Syntax error in polynomial text; position is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation needs all parameters instantiated to rationals.
class RequiresInstantiationError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document (JSON shape, indices, missing keys).
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace plas

#endif  // PLAS_ERRORS_HPP
