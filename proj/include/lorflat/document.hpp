#pragma once

#include "lorflat/double_extension.hpp"
#include "lorflat/metric_lie.hpp"

#include <optional>
#include <string>

namespace lorflat {

/// Skew operator input for the canonical-form command: the matrix plus an
/// optional metric (the identity is implied when absent).
struct OperatorDocument {
  Matrix matrix;
  std::optional<Matrix> metric;
};

/// Parses a JSON algebra document with fields dim, basis, brackets and
/// metric. Bracket entries carry i < j indices and a map from component
/// index to rational string; every rational in the document is a string
/// like "2" or "-3/4", never a float. Throws ParseError with the offending
/// field path in the message.
MetricLieAlgebra parse_algebra(const std::string& text);

/// Canonical JSON rendering: only nonzero i < j entries, rationals in
/// lowest terms. parse_algebra(emit_algebra(g)) reproduces g exactly.
std::string emit_algebra(const MetricLieAlgebra& g);

/// Parses a JSON extension tuple: base (an algebra document), xi, dee, mu
/// and b0, with shapes checked against the base dimension.
AdmissibleTuple parse_tuple(const std::string& text);

std::string emit_tuple(const AdmissibleTuple& t);

/// Tuple plus the change of basis that factorize produced.
std::string emit_factorization(const FactorizationResult& r);

OperatorDocument parse_operator(const std::string& text);

} // namespace lorflat
