#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace operalang {

/// Malformed textual input (relation, operator, expression or regex literal).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A composition position or an operand arity that does not fit the operator.
class ArityError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A carrier value violating the invariants of its operad (e.g. a reflexive
/// pair in an antireflexive relation).
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace operalang
