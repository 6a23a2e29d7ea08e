#pragma once

#include "lorflat/levi_civita.hpp"
#include "lorflat/metric_lie.hpp"

namespace lorflat {

/// Candidate data for a double extension: a Riemannian flat base B together
/// with endomorphisms xi and D of B, a scalar mu, and a vector b0 in B.
struct AdmissibleTuple {
  MetricLieAlgebra base;
  Matrix xi;
  Matrix dee;
  Scalar mu;
  Vector b0;
};

/// One exact boolean per admissibility condition.
struct AdmissibilityReport {
  bool cocycle = false;
  bool skewness = false;
  bool commutator = false;
  bool derivation_compat = false;
  bool ok() const { return cocycle && skewness && commutator && derivation_compat; }
  /// Comma-separated names of the failed conditions.
  std::string failures() const;
};

/// Evaluates the four admissibility conditions on all basis pairs of the
/// base. Throws NotRiemannianFlatError unless the base is Euclidean and flat.
AdmissibilityReport is_admissible(const AdmissibleTuple& t);

/// The algebra built on span{e} + B + span{ebar} with basis order (e, B-basis,
/// ebar), so index_e = 0 and index_ebar = dim - 1.
struct ExtensionResult {
  MetricLieAlgebra algebra;
  int index_e = 0;
  int index_ebar = 0;
};

/// Builds the double extension: [ebar, e] = mu e, [ebar, a] = D(a) - <b0,a> e,
/// [a, b] = [a, b]_B + <(xi - xi*) a, b> e, with the metric extended by a
/// hyperbolic pair orthogonal to B. The result is re-verified to satisfy the
/// Jacobi identity, flatness, and Lorentzian signature.
/// Throws NotAdmissibleError naming the failed conditions.
ExtensionResult extend(const AdmissibleTuple& t);

/// Exact verdicts for the structure of a nonunimodular Lorentzian flat
/// algebra: vanishing of L_h and two-sided product-ideal containments for
/// H = span{h} and its orthogonal.
struct StructureTheoremReport {
  Vector h;
  bool lh_zero = false;
  bool h_ideal_left = false;
  bool h_ideal_right = false;
  bool perp_ideal_left = false;
  bool perp_ideal_right = false;
  bool all() const {
    return lh_zero && h_ideal_left && h_ideal_right && perp_ideal_left && perp_ideal_right;
  }
};

/// Throws UnimodularError when h = 0, WrongSignatureError when the metric is
/// not Lorentzian, NotFlatError when the curvature does not vanish.
StructureTheoremReport verify_structure_theorem(const MetricLieAlgebra& g);

/// A tuple recovered from a nonunimodular Lorentzian flat algebra, plus the
/// change of basis whose columns express (e, B-basis, ebar) in the input
/// coordinates.
struct FactorizationResult {
  AdmissibleTuple tuple;
  Matrix change_of_basis;
};

/// Constructively inverts the double extension: pins e to the modular vector,
/// completes a deterministic hyperbolic pair, reads (xi, D, mu, b0) off the
/// brackets, and re-verifies that extending the recovered tuple reproduces
/// the input in the new basis exactly.
/// Throws UnimodularError, WrongSignatureError, or NotFlatError on gate
/// failures, as for verify_structure_theorem.
FactorizationResult factorize(const MetricLieAlgebra& g);

} // namespace lorflat
