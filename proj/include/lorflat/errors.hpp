#pragma once

#include <stdexcept>
#include <string>

namespace lorflat {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dimension or shape mismatch, or a constructor contract violation.
struct ShapeError : Error {
  using Error::Error;
};

/// A bilinear form turned out to be degenerate where a nondegenerate one is required.
struct DegenerateError : Error {
  using Error::Error;
};

/// A square linear system or matrix inversion met a singular matrix.
struct SingularError : Error {
  using Error::Error;
};

/// An operator expected to be skew-symmetric with respect to the given form is not.
struct NotSkewError : Error {
  using Error::Error;
};

/// A family of operators expected to commute pairwise does not.
struct NotCommutingError : Error {
  using Error::Error;
};

/// A base algebra handed to the extension machinery is not Riemannian flat.
struct NotRiemannianFlatError : Error {
  using Error::Error;
};

/// An extension tuple failed one of its compatibility conditions.
struct NotAdmissibleError : Error {
  using Error::Error;
};

/// The algebra is unimodular where a nonzero modular vector is required.
struct UnimodularError : Error {
  using Error::Error;
};

/// The metric signature is not the one the operation requires.
struct WrongSignatureError : Error {
  using Error::Error;
};

/// The algebra is not flat where flatness is required.
struct NotFlatError : Error {
  using Error::Error;
};

/// Catalog parameters violate a family constraint.
struct BadParametersError : Error {
  using Error::Error;
};

/// The algebra matches no catalog family.
struct NoMatchError : Error {
  using Error::Error;
};

/// A document could not be parsed; message carries the offending field path.
struct ParseError : Error {
  using Error::Error;
};

/// A mathematically guaranteed postcondition failed; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

} // namespace lorflat
