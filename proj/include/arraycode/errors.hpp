#pragma once

#include <stdexcept>
#include <string>

namespace arraycode {

// Invalid code parameters, exponent tuples or mismatched operands.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed parameters but data that violates an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Erasure pattern the code cannot (or this decoder will not) recover.
class UnrecoverableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent shard files.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace arraycode
