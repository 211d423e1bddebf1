#pragma once

#include <stdexcept>
#include <string>

namespace kcover {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Degenerate geometric input: coincident circles, collinear triangles,
// singular lattices, unbounded cells.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// Parameters outside an operation's domain (infeasible pattern parameters,
// out-of-range arguments).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace kcover
