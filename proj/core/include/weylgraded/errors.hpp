#pragma once

#include <stdexcept>
#include <string>

namespace weylgraded {

// Precondition violations on caller-supplied values (zero scale, non-admissible
// pair, non-generative element where a generative one is required, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A set that is not in the image of a boundary operator.
class NotInImage : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The input is well formed but outside what the implementation can decide,
// e.g. a support point that is not rational.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace weylgraded
