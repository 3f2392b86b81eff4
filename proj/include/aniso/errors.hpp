#pragma once

#include <stdexcept>
#include <string>

namespace aniso {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cholesky pivot <= 0 in a generalized eigenvalue reduction.
struct NotPositiveDefinite : Error {
  using Error::Error;
};

// Operation requested for a dimension where it is undefined.
struct InvalidDimension : Error {
  using Error::Error;
};

// Simplex measure below the degeneracy tolerance (1e-14 * diameter^d).
struct Degenerate : Error {
  using Error::Error;
};

// Field cannot supply partial derivatives of the requested order.
struct InsufficientSmoothness : Error {
  using Error::Error;
};

// Quadrature exactness degree outside the supported range [1, 20].
struct UnsupportedDegree : Error {
  using Error::Error;
};

// Element family parameters violate the family's exponent constraints.
struct InvalidFamilyParams : Error {
  using Error::Error;
};

// Mesh file is malformed; line is 1-based.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace aniso
