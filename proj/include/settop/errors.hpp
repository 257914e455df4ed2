#pragma once

#include <stdexcept>
#include <string>

namespace settop {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A family of sets that violates the Space invariants. The message names
/// the failing closure pair when there is one.
class InvalidSpace : public Error {
 public:
  using Error::Error;
};

/// A configured size bound (points, permutations, orbits, bitmask width) was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Operands that must share a group or a ground set do not.
class Mismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace settop
