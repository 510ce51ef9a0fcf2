#pragma once

#include <stdexcept>
#include <string>

namespace cheese {

/// An argument violates an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation or expansion attempted at (or numerically at) a pole.
class PoleError : public InputError {
 public:
  using InputError::InputError;
};

/// A serialized document is malformed; `field()` names the offending member.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace cheese
