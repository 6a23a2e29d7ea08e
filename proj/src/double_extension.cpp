#include "lorflat/double_extension.hpp"

#include "lorflat/errors.hpp"
#include "lorflat/linear.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lorflat {

namespace {

void check_tuple_shapes(const AdmissibleTuple& t) {
  const int m = t.base.dim();
  if (t.xi.rows() != m || t.xi.cols() != m)
    throw ShapeError("xi must be square of the base dimension");
  if (t.dee.rows() != m || t.dee.cols() != m)
    throw ShapeError("D must be square of the base dimension");
  if (t.b0.size() != m) throw ShapeError("b0 must have the base dimension");
}

} // namespace

std::string AdmissibilityReport::failures() const {
  std::vector<std::string> parts;
  if (!cocycle) parts.push_back("cocycle condition");
  if (!skewness) parts.push_back("skewness");
  if (!commutator) parts.push_back("commutator relation");
  if (!derivation_compat) parts.push_back("product-derivation compatibility");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ", ";
    out += parts[i];
  }
  return out;
}

AdmissibilityReport is_admissible(const AdmissibleTuple& t) {
  check_tuple_shapes(t);
  const ProductTable table = riemannian_flat_table(t.base);
  const MetricLieAlgebra& base = t.base;
  const int m = base.dim();

  AdmissibilityReport report;

  report.cocycle = true;
  for (int i = 0; i < m && report.cocycle; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Vector lhs = t.xi * base.ad_basis(i).col(j);
      const Vector rhs = table.left_basis(i) * Vector(t.xi.col(j)) -
                         table.left_basis(j) * Vector(t.xi.col(i));
      if (!is_zero(Vector(lhs - rhs))) {
        report.cocycle = false;
        break;
      }
    }
  }

  report.skewness = is_skew_wrt(base.gram(), Matrix(t.dee - t.xi));

  const Matrix rb0 = right_mult(table, t.b0);
  report.commutator =
      is_zero(Matrix(t.dee * t.xi - t.xi * t.dee - (t.xi * t.xi - t.mu * t.xi - rb0)));

  report.derivation_compat = true;
  for (int a = 0; a < m; ++a) {
    const Matrix la = table.left_basis(a);
    const Matrix lhs = la * t.xi - t.xi * la;
    const Matrix rhs = left_mult(table, Vector(t.dee.col(a))) + la * t.dee - t.dee * la;
    if (!is_zero(Matrix(lhs - rhs))) {
      report.derivation_compat = false;
      break;
    }
  }

  return report;
}

ExtensionResult extend(const AdmissibleTuple& t) {
  const AdmissibilityReport report = is_admissible(t);
  if (!report.ok())
    throw NotAdmissibleError("tuple is not admissible, failed: " + report.failures());

  const MetricLieAlgebra& base = t.base;
  const int m = base.dim();
  const int n = m + 2;
  const Matrix& g0 = base.gram().mat();
  const Matrix skew_part = t.xi - adjoint_wrt(base.gram(), t.xi);
  const Vector g0_b0 = g0 * t.b0;

  std::vector<BracketEntry> entries;
  {
    // [e, ebar] = -mu e.
    Vector v = Vector::Zero(n);
    v(0) = -t.mu;
    entries.push_back({0, n - 1, v});
  }
  for (int a = 0; a < m; ++a) {
    // [a, ebar] = -D(a) + <b0, a> e.
    Vector v = Vector::Zero(n);
    v(0) = g0_b0(a);
    for (int r = 0; r < m; ++r) v(r + 1) = -t.dee(r, a);
    entries.push_back({a + 1, n - 1, v});
  }
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      // [a, b] = [a, b]_B + <(xi - xi*) a, b> e.
      Vector v = Vector::Zero(n);
      v(0) = Vector(skew_part.col(a)).dot(Vector(g0.col(b)));
      v.segment(1, m) = base.ad_basis(a).col(b);
      entries.push_back({a + 1, b + 1, v});
    }
  }

  Matrix gram = Matrix::Zero(n, n);
  gram(0, n - 1) = 1;
  gram(n - 1, 0) = 1;
  gram.block(1, 1, m, m) = g0;

  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  names.push_back("e");
  for (const std::string& name : base.names()) names.push_back(name);
  names.push_back("ebar");

  ExtensionResult result{
      MetricLieAlgebra::from_brackets(n, entries, GramMatrix(gram), names), 0, n - 1};

  if (!jacobi_check(result.algebra).ok)
    throw InternalError("extension violates the Jacobi identity");
  if (classify_signature(result.algebra).kind != SignatureKind::Lorentzian)
    throw InternalError("extension metric is not Lorentzian");
  if (!is_flat(result.algebra).flat) throw InternalError("extension is not flat");
  return result;
}

StructureTheoremReport verify_structure_theorem(const MetricLieAlgebra& g) {
  if (classify_signature(g).kind != SignatureKind::Lorentzian)
    throw WrongSignatureError("metric is not Lorentzian");
  const ProductTable table = koszul_product(g);
  if (!is_flat(table).flat) throw NotFlatError("algebra is not flat");
  const Vector h = modular_vector(g);
  if (is_zero(h)) throw UnimodularError("algebra is unimodular");

  const int n = g.dim();
  const std::vector<Vector> h_span = {h};
  const std::vector<Vector> perp = orthogonal_complement(g.gram(), h_span);
  const Vector gh = g.gram().mat() * h;
  const Matrix rh = right_mult(table, h);

  StructureTheoremReport report;
  report.h = h;
  report.lh_zero = is_zero(left_mult(table, h));

  report.h_ideal_left = true;
  report.h_ideal_right = true;
  for (int i = 0; i < n; ++i) {
    if (!in_span(h_span, Vector(table.left_basis(i) * h))) report.h_ideal_left = false;
    if (!in_span(h_span, Vector(rh.col(i)))) report.h_ideal_right = false;
  }

  // Membership in the orthogonal of h is the single exact condition <x,h> = 0.
  report.perp_ideal_left = true;
  report.perp_ideal_right = true;
  for (const Vector& w : perp) {
    const Matrix lw = left_mult(table, w);
    for (int i = 0; i < n; ++i) {
      if (Vector(table.left_basis(i) * w).dot(gh) != 0) report.perp_ideal_left = false;
      if (Vector(lw.col(i)).dot(gh) != 0) report.perp_ideal_right = false;
    }
  }
  return report;
}

FactorizationResult factorize(const MetricLieAlgebra& g) {
  if (classify_signature(g).kind != SignatureKind::Lorentzian)
    throw WrongSignatureError("metric is not Lorentzian");
  const ProductTable table = koszul_product(g);
  if (!is_flat(table).flat) throw NotFlatError("algebra is not flat");
  const Vector h = modular_vector(g);
  if (is_zero(h)) throw UnimodularError("algebra is unimodular");

  const int n = g.dim();
  const int m = n - 2;
  const Vector e = h;
  const Vector ge = g.gram().mat() * e;
  if (e.dot(ge) != 0) throw InternalError("modular vector is not isotropic");

  // Deterministic lightlike partner: first coordinate axis not orthogonal to
  // e, rescaled to pairing 1, then corrected to be isotropic.
  int pivot = -1;
  for (int i = 0; i < n; ++i) {
    if (ge(i) != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) throw InternalError("modular vector is orthogonal to everything");
  Vector ebar = Vector::Zero(n);
  ebar(pivot) = Scalar(1) / ge(pivot);
  ebar -= (g.gram().inner(ebar, ebar) / Scalar(2)) * e;

  const std::vector<Vector> b_basis = orthogonal_complement(g.gram(), {e, ebar});
  if (static_cast<int>(b_basis.size()) != m)
    throw InternalError("hyperbolic plane complement has wrong dimension");

  Matrix trans(n, n);
  trans.col(0) = e;
  for (int c = 0; c < m; ++c) trans.col(c + 1) = b_basis[static_cast<size_t>(c)];
  trans.col(n - 1) = ebar;
  const MetricLieAlgebra conj = change_basis(g, trans);

  const Matrix& cg = conj.gram().mat();
  if (cg(0, 0) != 0 || cg(n - 1, n - 1) != 0 || cg(0, n - 1) != 1)
    throw InternalError("new basis is not a hyperbolic pair plus complement");
  const Matrix base_gram = cg.block(1, 1, m, m);
  if (!(signature(GramMatrix(base_gram)) == Signature{0, m}))
    throw InternalError("complement metric is not positive definite");

  // The brackets in the new basis must have extension shape: e commutes with
  // the complement, nothing lands on ebar.
  for (int a = 0; a < m; ++a)
    if (!is_zero(Vector(conj.ad_basis(0).col(a + 1))))
      throw InternalError("e does not commute with the complement");
  const Vector ebar_e = -conj.ad_basis(0).col(n - 1);
  const Scalar mu = ebar_e(0);
  for (int r = 1; r < n; ++r)
    if (ebar_e(r) != 0) throw InternalError("[ebar, e] is not a multiple of e");

  Matrix dee(m, m);
  Vector pairing(m);
  for (int a = 0; a < m; ++a) {
    const Vector br = -conj.ad_basis(a + 1).col(n - 1);
    if (br(n - 1) != 0) throw InternalError("[ebar, a] leaves the extension shape");
    dee.col(a) = br.segment(1, m);
    pairing(a) = -br(0);
  }
  const Vector b0 = solve(base_gram, pairing);

  Matrix skew_pairing = Matrix::Zero(m, m);
  std::vector<BracketEntry> base_entries;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const Vector br = conj.ad_basis(a + 1).col(b + 1);
      if (br(n - 1) != 0) throw InternalError("[a, b] leaves the extension shape");
      skew_pairing(a, b) = br(0);
      skew_pairing(b, a) = -br(0);
      base_entries.push_back({a, b, Vector(br.segment(1, m))});
    }
  }
  // skew_pairing(a, b) = <S a, b> with S = xi - xi*, so S = g0^-1 M^T.
  const Matrix s = exact_inverse(base_gram) * skew_pairing.transpose();
  const Matrix dee_star = adjoint_wrt(GramMatrix(base_gram), dee);
  const Matrix a_part = ((dee - dee_star) - s) / Scalar(2);
  const Matrix xi = dee - a_part;

  std::vector<std::string> base_names;
  for (int a = 0; a < m; ++a) base_names.push_back("b" + std::to_string(a + 1));
  MetricLieAlgebra base =
      MetricLieAlgebra::from_brackets(m, base_entries, GramMatrix(base_gram), base_names);

  FactorizationResult result{{std::move(base), xi, dee, mu, b0}, trans};

  if (!is_admissible(result.tuple).ok())
    throw InternalError("recovered tuple is not admissible");
  if (!same_algebra(extend(result.tuple).algebra, conj))
    throw InternalError("extending the recovered tuple does not reproduce the input");
  return result;
}

} // namespace lorflat
