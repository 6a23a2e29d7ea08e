#include "lorflat/structure_theory.hpp"

#include "lorflat/errors.hpp"
#include "lorflat/linear.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace lorflat {

namespace {

constexpr FloatScalar kDetectTol = 1e-9;
constexpr FloatScalar kKernelTol = 1e-12;

/// Coefficients of det(lambda I - m), index k holding the coefficient of
/// lambda^k, by the Faddeev-LeVerrier recurrence in exact arithmetic.
std::vector<Scalar> char_poly(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<Scalar> c(static_cast<size_t>(n) + 1, Scalar(0));
  c[static_cast<size_t>(n)] = 1;
  Matrix acc = Matrix::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    const Matrix prod = m * acc;
    Scalar tr = 0;
    for (int i = 0; i < n; ++i) tr += prod(i, i);
    c[static_cast<size_t>(n - k)] = -tr / k;
    acc = prod + c[static_cast<size_t>(n - k)] * Matrix::Identity(n, n);
  }
  return c;
}

MetricLieAlgebra build_milnor(int dim_b, int dim_u, const std::vector<Matrix>& generators) {
  const int n = dim_b + dim_u;
  std::vector<BracketEntry> entries;
  for (int i = 0; i < dim_b; ++i) {
    for (int c = 0; c < dim_u; ++c) {
      if (is_zero(Vector(generators[static_cast<size_t>(i)].col(c)))) continue;
      Vector v = Vector::Zero(n);
      for (int r = 0; r < dim_u; ++r) v(dim_b + r) = generators[static_cast<size_t>(i)](r, c);
      entries.push_back({i, dim_b + c, v});
    }
  }
  std::vector<std::string> names;
  for (int i = 0; i < dim_b; ++i) names.push_back("b" + std::to_string(i + 1));
  for (int i = 0; i < dim_u; ++i) names.push_back("u" + std::to_string(i + 1));
  return MetricLieAlgebra::from_brackets(n, entries, GramMatrix(Matrix::Identity(n, n)),
                                         std::move(names));
}

struct EuclidParts {
  std::vector<EuclidBlock> blocks;
  std::vector<FloatVector> kernel;
};

/// Rotation blocks and kernel of a float matrix skew wrt the identity.
/// Entries at or below noise_floor are rounding residue from an earlier
/// splitting step, so a matrix with no larger entry is the zero map. The
/// floor must come from the scale of the operator the matrix was cut from;
/// it is 0 when the input is an exact conversion.
EuclidParts euclid_decompose(const FloatMatrix& f, FloatScalar noise_floor) {
  EuclidParts parts;
  const int n = static_cast<int>(f.rows());
  if (n == 0) return parts;
  const FloatScalar scale = f.cwiseAbs().maxCoeff();
  if (scale <= noise_floor) {
    for (int i = 0; i < n; ++i) parts.kernel.push_back(FloatVector::Unit(n, i));
    return parts;
  }
  const FloatMatrix fn = f / scale;
  // fn^T fn = -fn^2 is positive semidefinite with eigenvalue alpha^2 of
  // multiplicity two per rotation plane.
  Eigen::SelfAdjointEigenSolver<FloatMatrix> es(fn.transpose() * fn);
  const FloatVector ev = es.eigenvalues();
  const FloatMatrix u = es.eigenvectors();

  int i = 0;
  while (i < n) {
    int j = i + 1;
    while (j < n && ev(j) - ev(i) <= 1e-8) ++j;
    const int count = j - i;
    FloatMatrix basis = u.middleCols(i, count);
    const FloatScalar lambda = ev.segment(i, count).mean();
    if (lambda <= kKernelTol) {
      for (int c = 0; c < count; ++c) parts.kernel.push_back(basis.col(c));
    } else {
      if (count % 2 != 0) throw InternalError("rotation eigenspace has odd dimension");
      const FloatScalar rate = std::sqrt(lambda);
      while (basis.cols() > 0) {
        // Deterministic gauge: take the first coordinate axis with a usable
        // projection onto the remaining invariant subspace.
        FloatVector e;
        for (int ax = 0; ax < n; ++ax) {
          FloatVector p = basis * (basis.row(ax).transpose());
          if (p.norm() > 0.5 / std::sqrt(static_cast<FloatScalar>(n))) {
            e = p.normalized();
            break;
          }
        }
        if (e.size() == 0) throw InternalError("no usable gauge axis in rotation plane");
        const FloatVector fv = (fn * e) / rate;
        parts.blocks.push_back({rate * scale, e, fv});
        // Deflate span{e, fv} and re-orthonormalize what is left.
        FloatMatrix next(n, basis.cols());
        int kept = 0;
        for (int c = 0; c < basis.cols(); ++c) {
          FloatVector v = basis.col(c);
          v -= e * e.dot(v) + fv * fv.dot(v);
          for (int k = 0; k < kept; ++k) v -= next.col(k) * next.col(k).dot(v);
          if (v.norm() > 1e-6) next.col(kept++) = v.normalized();
        }
        if (kept != basis.cols() - 2)
          throw InternalError("rotation plane deflation lost the wrong dimension");
        basis = next.leftCols(kept);
      }
    }
    i = j;
  }
  std::stable_sort(parts.blocks.begin(), parts.blocks.end(),
                   [](const EuclidBlock& a, const EuclidBlock& b) { return a.alpha > b.alpha; });
  return parts;
}

/// Gram-Schmidt wrt the bilinear form eta over columns assumed to span a
/// positive definite subspace.
FloatMatrix eta_orthonormalize(const FloatMatrix& eta, const FloatMatrix& cols) {
  FloatMatrix out(cols.rows(), cols.cols());
  int kept = 0;
  for (int c = 0; c < cols.cols(); ++c) {
    FloatVector v = cols.col(c);
    for (int k = 0; k < kept; ++k) v -= out.col(k) * out.col(k).dot(eta * v);
    const FloatScalar norm2 = v.dot(eta * v);
    if (norm2 > 1e-12) out.col(kept++) = v / std::sqrt(norm2);
  }
  return out.leftCols(kept);
}

/// eta-orthonormal basis of the eta-orthocomplement of the given vectors.
FloatMatrix eta_complement(const FloatMatrix& eta, const std::vector<FloatVector>& span_vecs) {
  const int n = static_cast<int>(eta.rows());
  const int k = static_cast<int>(span_vecs.size());
  if (k == 0) return eta_orthonormalize(eta, FloatMatrix::Identity(n, n));
  FloatMatrix constraints(k, n);
  for (int r = 0; r < k; ++r) constraints.row(r) = (eta * span_vecs[static_cast<size_t>(r)]).transpose();
  Eigen::JacobiSVD<FloatMatrix> svd(constraints, Eigen::ComputeFullV);
  const int rank = k;
  const FloatMatrix null_cols = svd.matrixV().rightCols(n - rank);
  return eta_orthonormalize(eta, null_cols);
}

int argmax_abs(const FloatVector& v) {
  int best = 0;
  for (int i = 1; i < v.size(); ++i)
    if (std::abs(v(i)) > std::abs(v(best))) best = i;
  return best;
}

/// Decomposes the restriction of ftilde to the eta-orthocomplement of the
/// consumed Lorentzian summand and maps the pieces back through frame.
void fill_euclid_remainder(SkewCanonicalForm& form, const FloatMatrix& eta,
                           const FloatMatrix& ftilde, const FloatMatrix& frame) {
  const FloatMatrix w = eta_complement(eta, form.lorentz_basis);
  const FloatMatrix restricted = w.transpose() * eta * ftilde * w;
  EuclidParts parts = euclid_decompose(restricted, ftilde.cwiseAbs().maxCoeff() * 1e-10);
  for (EuclidBlock& b : parts.blocks) {
    b.e = frame * (w * b.e);
    b.f = frame * (w * b.f);
    form.euclid_blocks.push_back(std::move(b));
  }
  for (FloatVector& v : parts.kernel) form.kernel_basis.push_back(frame * (w * v));
  for (FloatVector& v : form.lorentz_basis) v = frame * v;
}

} // namespace

MetricLieAlgebra milnor_build(int dim_b, int dim_u, const std::vector<Matrix>& generators) {
  if (dim_b < 0 || dim_u < 0) throw ShapeError("dimensions must be nonnegative");
  if (static_cast<int>(generators.size()) != dim_b)
    throw ShapeError("need exactly one generator per abelian factor direction");
  for (size_t i = 0; i < generators.size(); ++i) {
    const Matrix& gen = generators[i];
    if (gen.rows() != dim_u || gen.cols() != dim_u)
      throw ShapeError("generator " + std::to_string(i + 1) + " has the wrong shape");
    if (!is_zero(Matrix(gen + gen.transpose())))
      throw NotSkewError("generator " + std::to_string(i + 1) + " is not skew");
  }
  for (size_t i = 0; i < generators.size(); ++i) {
    for (size_t j = i + 1; j < generators.size(); ++j) {
      if (!is_zero(Matrix(generators[i] * generators[j] - generators[j] * generators[i])))
        throw NotCommutingError("generators " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " do not commute");
    }
  }
  MetricLieAlgebra result = build_milnor(dim_b, dim_u, generators);
  try {
    riemannian_flat_table(result);
  } catch (const NotRiemannianFlatError& ex) {
    throw InternalError(std::string("constructed algebra is not Riemannian flat: ") + ex.what());
  }
  return result;
}

RiemannianSplitting riemannian_splitting(const MetricLieAlgebra& g) {
  const ProductTable table = riemannian_flat_table(g);
  const int n = g.dim();

  const std::vector<Vector> derived = derived_ideal(g);
  const std::vector<Vector> perp = orthogonal_complement(g.gram(), derived);

  // Same subspace as the kernel of b -> R_b.
  const std::vector<Vector> rperp = right_mult_kernel(table);
  // And as the solutions of ad_b skew.
  Matrix sys(n * n, n);
  for (int i = 0; i < n; ++i) {
    const Matrix skew_defect =
        g.gram().mat() * g.ad_basis(i) + g.ad_basis(i).transpose() * g.gram().mat();
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) sys(r * n + c, i) = skew_defect(r, c);
  }
  const std::vector<Vector> aperp = kernel_basis(sys);
  if (!spans_equal(perp, rperp) || !spans_equal(perp, aperp))
    throw InternalError("characterizations of the derived ideal orthogonal disagree");

  RiemannianSplitting split;
  split.derived_basis = derived;
  split.z_basis = center(g);
  for (const Vector& z : split.z_basis)
    if (!in_span(perp, z)) throw InternalError("center is not orthogonal to the derived ideal");
  split.s_basis = span_intersection(perp, orthogonal_complement(g.gram(), split.z_basis));

  if (static_cast<int>(split.s_basis.size() + split.z_basis.size() +
                       split.derived_basis.size()) != n)
    throw InternalError("splitting dimensions do not sum to the algebra dimension");
  if (split.derived_basis.size() % 2 != 0)
    throw InternalError("derived ideal of a flat algebra must be even dimensional");
  for (const Vector& z : split.z_basis)
    if (!is_zero(left_mult(table, z))) throw InternalError("central direction acts nontrivially");
  for (const Vector& d : split.derived_basis)
    if (!is_zero(left_mult(table, d))) throw InternalError("derived direction acts nontrivially");
  return split;
}

std::vector<Vector> weight_space(const std::vector<Matrix>& rho,
                                 const std::vector<Scalar>& lambda) {
  if (rho.empty()) throw ShapeError("rho must contain at least one matrix");
  if (rho.size() != lambda.size()) throw ShapeError("need one weight entry per generator");
  const int n = static_cast<int>(rho[0].rows());
  const int k = static_cast<int>(rho.size());
  Matrix stacked(k * n, n);
  for (int i = 0; i < k; ++i) {
    const Matrix& m = rho[static_cast<size_t>(i)];
    if (m.rows() != n || m.cols() != n) throw ShapeError("rho matrices must share one square shape");
    stacked.block(i * n, 0, n, n) = m - lambda[static_cast<size_t>(i)] * Matrix::Identity(n, n);
  }
  return kernel_basis(stacked);
}

SkewCanonicalForm skew_canonical_euclidean(const Matrix& f) {
  if (f.rows() != f.cols()) throw ShapeError("operator must be square");
  if (!is_zero(Matrix(f + f.transpose())))
    throw NotSkewError("operator is not skew with respect to the identity metric");
  SkewCanonicalForm form;
  EuclidParts parts = euclid_decompose(to_float(f), 0);
  form.euclid_blocks = std::move(parts.blocks);
  form.kernel_basis = std::move(parts.kernel);
  return form;
}

SkewCanonicalForm skew_canonical_lorentz(const Matrix& f, const GramMatrix& g) {
  const int n = g.dim();
  if (f.rows() != n || f.cols() != n) throw ShapeError("operator must match the metric dimension");
  if (!(signature(g) == Signature{1, n - 1})) throw WrongSignatureError("metric is not Lorentzian");
  if (!is_skew_wrt(g, f)) throw NotSkewError("operator is not skew with respect to the metric");

  // Exact congruence to a diagonal form, then a float rescale to the frame
  // eta = diag(-1, 1, ..., 1); columns of q express the frame in input
  // coordinates.
  const CongruenceDiagonalization cd = congruence_diagonalize(g);
  int neg_index = -1;
  for (int i = 0; i < n; ++i)
    if (cd.diag(i) < 0) neg_index = i;
  FloatMatrix q(n, n);
  q.col(0) = to_float(Vector(cd.p.col(neg_index))) / std::sqrt(-to_double(cd.diag(neg_index)));
  int out = 1;
  for (int i = 0; i < n; ++i) {
    if (i == neg_index) continue;
    q.col(out++) = to_float(Vector(cd.p.col(i))) / std::sqrt(to_double(cd.diag(i)));
  }
  FloatMatrix eta = FloatMatrix::Identity(n, n);
  eta(0, 0) = -1;
  // q^T g q = eta, so the frame image of the operator is eta q^T g f q.
  const FloatMatrix gf = to_float(g.mat());
  const FloatMatrix qinv = eta * q.transpose() * gf;
  const FloatMatrix ftilde = qinv * to_float(f) * q;

  SkewCanonicalForm form;
  if (is_zero(f)) {
    // Zero operator: a timelike axis plus an all-kernel remainder.
    form.lorentz_case = LorentzCase::CaseI;
    form.lorentz_basis = {FloatVector::Unit(n, 0)};
    fill_euclid_remainder(form, eta, FloatMatrix::Zero(n, n), q);
    return form;
  }
  const FloatScalar scale = ftilde.cwiseAbs().maxCoeff();
  const FloatMatrix fn = ftilde / scale;

  // The case split is decided exactly, floats only extract bases afterwards.
  // Eigenvalues of a skew operator come in opposite pairs, so
  // det(lambda I - f) = lambda^m q(lambda^2) with q real rooted: a boost
  // summand is exactly one positive root of q, visible as a coefficient sign
  // variation, and a null rotation summand makes the zero eigenvalue
  // defective, leaving the kernel two dimensions short of its multiplicity.
  // Float eigenvalues cannot make these calls: a cubic Jordan block perturbs
  // them by roughly eps^(1/3), far above any honest threshold.
  const std::vector<Scalar> cp = char_poly(f);
  int zero_mult = 0;
  while (zero_mult < n && cp[static_cast<size_t>(zero_mult)] == 0) ++zero_mult;
  if ((n - zero_mult) % 2 != 0) throw InternalError("eigenvalues do not pair up");
  for (int k = zero_mult + 1; k <= n; k += 2)
    if (cp[static_cast<size_t>(k)] != 0) throw InternalError("eigenvalues do not pair up");
  bool has_boost = false;
  {
    int sign_prev = 0;
    for (int k = zero_mult; k <= n; k += 2) {
      const Scalar& ck = cp[static_cast<size_t>(k)];
      if (ck == 0) continue;
      const int s = ck > 0 ? 1 : -1;
      if (sign_prev != 0 && s != sign_prev) has_boost = true;
      sign_prev = s;
    }
  }

  if (has_boost) {
    Eigen::EigenSolver<FloatMatrix> es(fn);
    int boost = -1;
    for (int i = 0; i < n; ++i) {
      const auto lam = es.eigenvalues()(i);
      if (lam.real() > kDetectTol && std::abs(lam.imag()) <= kDetectTol &&
          (boost < 0 || lam.real() > es.eigenvalues()(boost).real()))
        boost = i;
    }
    if (boost < 0) throw InternalError("boost eigenvalue not resolved");
    form.lorentz_case = LorentzCase::CaseII;
    form.alpha = es.eigenvalues()(boost).real() * scale;
    const auto realize = [&](int col) {
      Eigen::VectorXcd v = es.eigenvectors().col(col);
      int piv = 0;
      for (int i = 1; i < n; ++i)
        if (std::abs(v(i)) > std::abs(v(piv))) piv = i;
      v *= std::conj(v(piv)) / std::abs(v(piv));
      return FloatVector(v.real());
    };
    int other = -1;
    for (int i = 0; i < n; ++i) {
      const auto lam = es.eigenvalues()(i);
      if (lam.real() < -kDetectTol && std::abs(lam.imag()) <= kDetectTol &&
          (other < 0 ||
           std::abs(lam.real() + es.eigenvalues()(boost).real()) <
               std::abs(es.eigenvalues()(other).real() + es.eigenvalues()(boost).real())))
        other = i;
    }
    if (other < 0) throw InternalError("boost eigenvalue has no opposite partner");
    FloatVector e = realize(boost).normalized();
    FloatVector ebar = realize(other);
    const FloatScalar pair = e.dot(eta * ebar);
    if (std::abs(pair) <= kDetectTol) throw InternalError("boost eigenvectors pair degenerately");
    ebar /= pair;
    form.lorentz_basis = {e, ebar};
    fill_euclid_remainder(form, eta, ftilde, q);
    // Deterministic gauge: the largest coordinate of e is set to one.
    const FloatScalar s = form.lorentz_basis[0](argmax_abs(form.lorentz_basis[0]));
    form.lorentz_basis[0] /= s;
    form.lorentz_basis[1] *= s;
    return form;
  }

  const int defect = zero_mult - (n - exact_rank(f));
  if (defect == 2) {
    // Null rotation case: a nilpotent summand of index three. The kernel of
    // ftilde^3 has exact dimension zero_mult and the square is rank one on
    // it; its image direction seeds the chain.
    Eigen::JacobiSVD<FloatMatrix> svd3(FloatMatrix(fn * fn * fn), Eigen::ComputeFullV);
    const FloatMatrix w3 = svd3.matrixV().rightCols(zero_mult);
    const FloatMatrix sq_on_w3 = fn * fn * (w3 * w3.transpose());
    Eigen::JacobiSVD<FloatMatrix> svd2(sq_on_w3, Eigen::ComputeFullV);
    if (!(svd2.singularValues()(0) > kDetectTol))
      throw InternalError("null rotation chain did not surface");
    form.lorentz_case = LorentzCase::CaseIII;
    form.alpha = 1.0;
    FloatVector z = svd2.matrixV().col(0);
    z = w3 * (w3.transpose() * z);
    z.normalize();
    // Deterministic sign for the chain seed.
    const FloatVector z_orig = q * z;
    if (z_orig(argmax_abs(z_orig)) < 0) z = -z;
    const FloatVector u = ftilde * z;
    const FloatVector w = ftilde * u;
    const FloatScalar rt = std::sqrt(u.dot(eta * u));
    if (!(rt > 0)) throw InternalError("null rotation chain has no spacelike middle vector");
    const FloatVector fvec = -u / rt;
    const FloatVector evec = -w / rt;
    FloatVector ebar = z / rt;
    // Numerical cleanup inside the summand: <ebar,f> and <ebar,ebar> fold
    // into the null directions.
    ebar -= fvec * ebar.dot(eta * fvec);
    ebar -= evec * (ebar.dot(eta * ebar) / 2);
    form.lorentz_basis = {evec, ebar, fvec};
    fill_euclid_remainder(form, eta, ftilde, q);
    return form;
  }
  if (defect != 0) throw InternalError("zero eigenvalue has an impossible defect");

  // Otherwise the kernel of the operator contains a timelike direction.
  if (zero_mult == 0) throw InternalError("no Lorentzian summand shape detected");
  const int ker_dim = zero_mult;
  Eigen::JacobiSVD<FloatMatrix> svd1(fn, Eigen::ComputeFullV);
  const FloatMatrix k = svd1.matrixV().rightCols(ker_dim);
  Eigen::SelfAdjointEigenSolver<FloatMatrix> res(FloatMatrix(k.transpose() * eta * k));
  if (!(res.eigenvalues()(0) < 0 && (ker_dim == 1 || res.eigenvalues()(1) > 0)))
    throw InternalError("kernel does not contain exactly one timelike direction");
  FloatVector x = k * res.eigenvectors().col(0);
  x /= std::sqrt(-x.dot(eta * x));
  const FloatVector x_orig = q * x;
  if (x_orig(argmax_abs(x_orig)) < 0) x = -x;
  form.lorentz_case = LorentzCase::CaseI;
  form.lorentz_basis = {x};
  fill_euclid_remainder(form, eta, ftilde, q);
  return form;
}

FloatMatrix reconstruct_form(const SkewCanonicalForm& form, const FloatMatrix& gram) {
  const int n = static_cast<int>(gram.rows());
  FloatMatrix out = FloatMatrix::Zero(n, n);
  for (const EuclidBlock& b : form.euclid_blocks)
    out += b.alpha * (b.f * (gram * b.e).transpose() - b.e * (gram * b.f).transpose());
  if (form.lorentz_case == LorentzCase::CaseII) {
    const FloatVector& e = form.lorentz_basis[0];
    const FloatVector& ebar = form.lorentz_basis[1];
    out += form.alpha * (e * (gram * ebar).transpose() - ebar * (gram * e).transpose());
  } else if (form.lorentz_case == LorentzCase::CaseIII) {
    const FloatVector& e = form.lorentz_basis[0];
    const FloatVector& fvec = form.lorentz_basis[2];
    out += form.alpha * (e * (gram * fvec).transpose() - fvec * (gram * e).transpose());
  }
  return out;
}

} // namespace lorflat
