#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyalba {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A symbol was used where a different kind is required, e.g. `!'i.` or `@p`.
class KindError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Unsafe substitution: a free state variable of the substituted formula
// would end up in the scope of a binder for the same variable.
class CaptureError : public Error {
 public:
  using Error::Error;
};

class UnboundSymbolError : public Error {
 public:
  using Error::Error;
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class PolarityError : public Error {
 public:
  using Error::Error;
};

// Internal consistency failure of the rewriting engine (step budget, broken invariant).
class EngineError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyalba
