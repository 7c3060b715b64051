#pragma once

#include <stdexcept>
#include <string>

namespace invlab {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can map them to a single diagnostic path.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A point that must be interior lies on the boundary or outside.
class OutsideDomain : public Error {
 public:
  using Error::Error;
};

// The operation has no closed form / honest algorithm for this variant.
class Unsupported : public Error {
 public:
  using Error::Error;
};

class EmptyIntersection : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Numerical procedure could not meet its contract (divergent integral,
// indefinite Hessian, solver escaping the domain).
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace invlab
