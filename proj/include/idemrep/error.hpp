#pragma once

#include <stdexcept>
#include <string>

namespace idemrep {

/// Failure categories. The CLI maps each one to its own exit status.
enum class ErrorKind { Parse, Cap, Validation };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed input text (JSON, names, flags).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

/// A configured search or size budget would be exceeded.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(ErrorKind::Cap, what) {}
};

/// An algebraic invariant does not hold for the given input.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::Validation, what) {}
};

}  // namespace idemrep
