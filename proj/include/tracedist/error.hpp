#pragma once

#include <stdexcept>

namespace tracedist {

/// Malformed input or a violated precondition. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A checked mathematical invariant did not hold. The CLI maps this to exit code 3.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tracedist
