#pragma once

#include <stdexcept>
#include <string>

namespace shapes {

// Bad user input: wrong sizes, out-of-range parameters, malformed files.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An algebraic identity the library relies on did not hold. Always a bug
// (or a corrupted input that slipped past validation), never a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A level is larger than the configured state-count cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SHAPES_ENSURE(cond, msg)                                      \
  do {                                                                \
    if (!(cond)) throw ::shapes::ConsistencyError(std::string(msg)); \
  } while (0)

}  // namespace shapes
