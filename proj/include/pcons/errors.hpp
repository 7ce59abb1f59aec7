#pragma once

#include <stdexcept>
#include <string>

namespace pcons {

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input: formulas, conditionals, knowledge-base files,
// model files. Carries the 0-based offset into the offending text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position + 1) + ")"),
        message_(message),
        position_(position) {}

  const std::string& raw_message() const { return message_; }
  std::size_t position() const { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

// A formula was evaluated under an assignment whose universe misses one
// of its atoms.
class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(const std::string& atom)
      : Error("unknown atom '" + atom + "'") {}
};

// An operation was called outside its stated precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// An exponential search was asked to exceed its configured size bound.
class BoundExceededError : public Error {
 public:
  using Error::Error;
};

// A conditional probability was requested for an antecedent that carries
// zero weight in the model.
class ImproperModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace pcons
