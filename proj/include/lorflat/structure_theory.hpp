#pragma once

#include "lorflat/levi_civita.hpp"
#include "lorflat/metric_lie.hpp"

#include <vector>

namespace lorflat {

/// Orthogonal splitting of a Riemannian flat algebra into rotation generators
/// S, extra central directions Z, and the derived ideal.
struct RiemannianSplitting {
  std::vector<Vector> s_basis;
  std::vector<Vector> z_basis;
  std::vector<Vector> derived_basis;
};

/// Semidirect product of an abelian algebra spanned by b1..b_{dim_b} acting
/// on a Euclidean abelian ideal u by commuting skew generators:
/// [b_i, u] = generators[i] u, all other brackets zero, standard metric.
/// The result is re-verified to be Riemannian flat.
/// Throws NotSkewError or NotCommutingError when a precondition fails.
MetricLieAlgebra milnor_build(int dim_b, int dim_u, const std::vector<Matrix>& generators);

/// Splits a Riemannian flat algebra. The orthogonal of the derived ideal is
/// computed three ways (metric complement, kernel of right multiplication,
/// skew-adjointness of ad) and the results are required to agree.
/// Throws NotRiemannianFlatError on inputs outside the domain.
RiemannianSplitting riemannian_splitting(const MetricLieAlgebra& g);

/// Exact joint eigenspace {x : rho[i] x = lambda[i] x for all i}.
std::vector<Vector> weight_space(const std::vector<Matrix>& rho,
                                 const std::vector<Scalar>& lambda);

enum class LorentzCase { None, CaseI, CaseII, CaseIII };

/// One rotation plane: F(e) = alpha f, F(f) = -alpha e on an orthonormal pair.
struct EuclidBlock {
  FloatScalar alpha = 0;
  FloatVector e;
  FloatVector f;
};

/// Canonical shape of a skew endomorphism: an optional Lorentzian summand,
/// rotation blocks with positive rates, and the kernel of the remainder.
///
/// lorentz_basis holds, by case: CaseI a single timelike kernel vector;
/// CaseII a null pair (e, ebar) with <e, ebar> = 1, F(e) = alpha e,
/// F(ebar) = -alpha ebar; CaseIII a triple (e, ebar, f) with F(e) = 0,
/// F(f) = alpha e, F(ebar) = -alpha f, where alpha is normalized to 1 using
/// the null pair's scale freedom.
struct SkewCanonicalForm {
  LorentzCase lorentz_case = LorentzCase::None;
  FloatScalar alpha = 0;
  std::vector<FloatVector> lorentz_basis;
  std::vector<EuclidBlock> euclid_blocks;
  std::vector<FloatVector> kernel_basis;
};

/// Decomposes an endomorphism that is skew with respect to the identity
/// metric into rotation blocks plus kernel. Skewness is checked exactly on
/// the rational input; the decomposition itself runs in floating point.
/// Throws NotSkewError.
SkewCanonicalForm skew_canonical_euclidean(const Matrix& f);

/// Decomposes an endomorphism of a Lorentzian space that is skew with
/// respect to g: identifies exactly one of the three Lorentzian summand
/// shapes, then decomposes the Euclidean remainder. Preconditions are checked
/// exactly; the decomposition runs in floating point.
/// Throws NotSkewError and WrongSignatureError.
SkewCanonicalForm skew_canonical_lorentz(const Matrix& f, const GramMatrix& g);

/// Rebuilds the operator encoded by a canonical form as a float matrix, with
/// respect to the float image of the metric the form was computed against.
FloatMatrix reconstruct_form(const SkewCanonicalForm& form, const FloatMatrix& gram);

} // namespace lorflat
