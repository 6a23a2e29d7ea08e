#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

#include "lorflat/errors.hpp"

namespace Eigen {

// Adapt GMP rationals as an Eigen scalar type. Exact field: epsilon and
// dummy_precision are genuinely zero, which makes rank/kernel decisions exact
// once decompositions run with a zero threshold.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

} // namespace Eigen

namespace lorflat {

/// Exact rational scalar; always held in canonical reduced form.
using Scalar = mpq_class;

/// Floating scalar for the quarantined spectral routines.
using FloatScalar = double;

using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using FloatMatrix = Eigen::MatrixXd;
using FloatVector = Eigen::VectorXd;

/// Parses "p", "-p", or "p/q" with nonzero q into a canonical rational.
/// Throws ParseError on any other shape.
Scalar parse_rational(const std::string& text);

/// Renders a rational as "p" or "p/q" in lowest terms; inverse of parse_rational.
std::string format_rational(const Scalar& q);

/// Nearest double; used only on the explicit float path.
inline FloatScalar to_double(const Scalar& q) { return q.get_d(); }

/// Entrywise nearest-double image of an exact matrix.
inline FloatMatrix to_float(const Matrix& m) {
  FloatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

inline FloatVector to_float(const Vector& v) {
  FloatVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = to_double(v(i));
  return out;
}

} // namespace lorflat
