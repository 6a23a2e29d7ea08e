#include "lorflat/catalog.hpp"
#include "lorflat/errors.hpp"
#include "lorflat/levi_civita.hpp"
#include "lorflat/linear.hpp"
#include "lorflat/metric_lie.hpp"
#include "lorflat/structure_theory.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace lorflat;
using namespace lorflat::testing;

namespace {

Matrix rot2(const Scalar& s) {
  Matrix j = Matrix::Zero(2, 2);
  j(0, 1) = -s;
  j(1, 0) = s;
  return j;
}

Vector unit(int n, int i) {
  Vector v = Vector::Zero(n);
  v(i) = 1;
  return v;
}

/// Exact orthogonal rotation by a Pythagorean angle in coordinates (i, j).
Matrix pyth_rotation(int n, int i, int j, const Scalar& t) {
  const Scalar den = 1 + t * t;
  const Scalar c = (1 - t * t) / den;
  const Scalar s = 2 * t / den;
  Matrix r = Matrix::Identity(n, n);
  r(i, i) = c;
  r(j, j) = c;
  r(i, j) = -s;
  r(j, i) = s;
  return r;
}

FloatScalar finner(const FloatMatrix& g, const FloatVector& x, const FloatVector& y) {
  return x.dot(g * y);
}

std::vector<FloatScalar> sorted_rates(const SkewCanonicalForm& form) {
  std::vector<FloatScalar> rates;
  for (const auto& b : form.euclid_blocks) rates.push_back(b.alpha);
  std::sort(rates.begin(), rates.end());
  return rates;
}

int form_dimension(const SkewCanonicalForm& form) {
  return static_cast<int>(form.lorentz_basis.size() + 2 * form.euclid_blocks.size() +
                          form.kernel_basis.size());
}

} // namespace

TEST_CASE("milnor build shapes and gates") {
  const auto m = milnor_build(1, 2, {rot2(Scalar(1))});
  CHECK(m.dim() == 3);
  CHECK(m.names() == std::vector<std::string>{"b1", "u1", "u2"});
  CHECK(jacobi_check(m).ok);
  CHECK(is_flat(m).flat);
  CHECK(derived_ideal(m).size() == 2);
  // [b1, u1] = u2 and [b1, u2] = -u1 with this generator.
  CHECK(vec_eq(m.bracket(unit(3, 0), unit(3, 1)), unit(3, 2)));
  CHECK(vec_eq(m.bracket(unit(3, 0), unit(3, 2)), Vector(-unit(3, 1))));

  const auto flat4 = milnor_build(0, 4, {});
  CHECK(flat4.dim() == 4);
  CHECK(derived_ideal(flat4).empty());

  Matrix shear = Matrix::Zero(2, 2);
  shear(0, 1) = 1;
  CHECK_THROWS_AS((void)milnor_build(1, 2, {shear}), NotSkewError);

  // Rotations in overlapping planes do not commute.
  Matrix j01 = Matrix::Zero(3, 3);
  j01.block(0, 0, 2, 2) = rot2(Scalar(1));
  Matrix j12 = Matrix::Zero(3, 3);
  j12.block(1, 1, 2, 2) = rot2(Scalar(1));
  CHECK_THROWS_AS((void)milnor_build(2, 3, {j01, j12}), NotCommutingError);

  CHECK_THROWS_AS((void)milnor_build(2, 2, {rot2(Scalar(1))}), ShapeError);
  CHECK_THROWS_AS((void)milnor_build(1, 3, {rot2(Scalar(1))}), ShapeError);
}

TEST_CASE("riemannian splitting of an abelian algebra") {
  const auto split = riemannian_splitting(milnor_build(0, 3, {}));
  CHECK(split.s_basis.empty());
  CHECK(split.z_basis.size() == 3);
  CHECK(split.derived_basis.empty());
}

TEST_CASE("riemannian splitting of rotation semidirect products") {
  const auto m = milnor_build(1, 2, {rot2(Scalar(1))});
  const auto split = riemannian_splitting(m);
  CHECK(split.s_basis.size() == 1);
  CHECK(split.z_basis.empty());
  CHECK(split.derived_basis.size() == 2);
  CHECK(spans_equal(split.s_basis, {unit(3, 0)}));
  CHECK(spans_equal(split.derived_basis, {unit(3, 1), unit(3, 2)}));

  // A fixed axis moves into the center.
  Matrix gen = Matrix::Zero(3, 3);
  gen.block(0, 0, 2, 2) = rot2(Scalar(2));
  const auto fixed_axis = milnor_build(1, 3, {gen});
  const auto split2 = riemannian_splitting(fixed_axis);
  CHECK(split2.s_basis.size() == 1);
  CHECK(split2.z_basis.size() == 1);
  CHECK(split2.derived_basis.size() == 2);
  CHECK(spans_equal(split2.z_basis, {unit(4, 3)}));
  CHECK(spans_equal(split2.s_basis, {unit(4, 0)}));

  // Two independent rotation planes.
  Matrix g1 = Matrix::Zero(4, 4);
  g1.block(0, 0, 2, 2) = rot2(Scalar(1));
  Matrix g2m = Matrix::Zero(4, 4);
  g2m.block(2, 2, 2, 2) = rot2(Scalar(3));
  const auto two = riemannian_splitting(milnor_build(2, 4, {g1, g2m}));
  CHECK(two.s_basis.size() == 2);
  CHECK(two.z_basis.empty());
  CHECK(two.derived_basis.size() == 4);
}

TEST_CASE("riemannian splitting summands are orthogonal and inert") {
  Matrix gen = Matrix::Zero(3, 3);
  gen.block(0, 0, 2, 2) = rot2(Scalar(2));
  const auto m = milnor_build(1, 3, {gen});
  const auto split = riemannian_splitting(m);
  const auto table = koszul_product(m);

  for (const auto& s : split.s_basis) {
    for (const auto& z : split.z_basis) CHECK(m.gram().inner(s, z) == 0);
    for (const auto& d : split.derived_basis) CHECK(m.gram().inner(s, d) == 0);
  }
  for (const auto& z : split.z_basis) {
    for (const auto& d : split.derived_basis) CHECK(m.gram().inner(z, d) == 0);
    CHECK(is_zero(left_mult(table, z)));
  }
  for (const auto& d : split.derived_basis) CHECK(is_zero(left_mult(table, d)));
}

TEST_CASE("products of a flat algebra land in the derived ideal") {
  // The product span equals the derived ideal span, checked exactly.
  const std::vector<MetricLieAlgebra> corpus = {
      milnor_build(0, 2, {}),
      milnor_build(1, 2, {rot2(Scalar(1))}),
      milnor_build(1, 3, [] {
        Matrix gen = Matrix::Zero(3, 3);
        gen.block(0, 0, 2, 2) = rot2(Scalar(5));
        return std::vector<Matrix>{gen};
      }()),
  };
  for (const auto& m : corpus) {
    const auto table = koszul_product(m);
    const auto derived = derived_ideal(m);
    std::vector<Vector> products;
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j) products.push_back(table.product_basis(i, j));
    for (const auto& p : products) CHECK(in_span(derived, p));
    CHECK(spans_equal(span_basis(products), derived));
  }
}

TEST_CASE("riemannian splitting gates") {
  CHECK_THROWS_AS((void)riemannian_splitting(instantiate(g2(Scalar(1)))),
                  NotRiemannianFlatError);
  Vector c01 = Vector::Zero(3);
  c01(2) = 1;
  Vector c02 = Vector::Zero(3);
  c02(1) = -1;
  Vector c12 = Vector::Zero(3);
  c12(0) = 1;
  const auto so3 = MetricLieAlgebra::from_brackets(3, {{0, 1, c01}, {0, 2, c02}, {1, 2, c12}},
                                                   GramMatrix(Matrix::Identity(3, 3)));
  CHECK_THROWS_AS((void)riemannian_splitting(so3), NotRiemannianFlatError);
}

TEST_CASE("weight spaces") {
  // Zero representation: everything has weight zero.
  CHECK(weight_space({Matrix::Zero(2, 2)}, {Scalar(0)}).size() == 2);

  // Adjoint representation of the plane family: weight (0, mu) is span{e}.
  const Scalar mu = q("5/3");
  const auto plane = instantiate(g2(mu));
  const auto ws = weight_space({plane.ad_basis(0), plane.ad_basis(1)}, {Scalar(0), mu});
  REQUIRE(ws.size() == 1);
  CHECK(vec_eq(ws[0], unit(2, 0)));

  // A rotation has no real nonzero weight.
  CHECK(weight_space({rot2(Scalar(1))}, {Scalar(1)}).empty());

  CHECK_THROWS_AS((void)weight_space({}, {}), ShapeError);
  CHECK_THROWS_AS((void)weight_space({Matrix::Zero(2, 2)}, {Scalar(0), Scalar(1)}), ShapeError);
  CHECK_THROWS_AS((void)weight_space({Matrix::Zero(2, 2), Matrix::Zero(3, 3)},
                                     {Scalar(0), Scalar(1)}),
                  ShapeError);
}

TEST_CASE("euclidean canonical form of simple operators") {
  const auto zero = skew_canonical_euclidean(Matrix::Zero(3, 3));
  CHECK(zero.lorentz_case == LorentzCase::None);
  CHECK(zero.euclid_blocks.empty());
  CHECK(zero.kernel_basis.size() == 3);

  Matrix f = Matrix::Zero(2, 2);
  f(0, 1) = 2;
  f(1, 0) = -2;
  const auto one = skew_canonical_euclidean(f);
  REQUIRE(one.euclid_blocks.size() == 1);
  CHECK(one.kernel_basis.empty());
  CHECK(one.euclid_blocks[0].alpha == doctest::Approx(2.0).epsilon(1e-9));
  // Gauge: e is the normalized projection of the first coordinate axis.
  CHECK(one.euclid_blocks[0].e(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(one.euclid_blocks[0].f(1) == doctest::Approx(-1.0).epsilon(1e-12));

  Matrix shear = Matrix::Zero(2, 2);
  shear(0, 1) = 1;
  CHECK_THROWS_AS((void)skew_canonical_euclidean(shear), NotSkewError);
  CHECK_THROWS_AS((void)skew_canonical_euclidean(Matrix::Zero(2, 3)), ShapeError);
}

TEST_CASE("euclidean canonical form recovers constructed blocks") {
  // Exact block matrix: rates 3 and 3/2 plus a 2-dim kernel.
  Matrix b = Matrix::Zero(6, 6);
  b.block(0, 0, 2, 2) = rot2(Scalar(3));
  b.block(2, 2, 2, 2) = rot2(q("3/2"));
  const Matrix qrot = pyth_rotation(6, 0, 2, q("1/2")) * pyth_rotation(6, 1, 4, q("1/3")) *
                      pyth_rotation(6, 3, 5, q("2/5"));
  REQUIRE(is_zero(Matrix(qrot * qrot.transpose() - Matrix::Identity(6, 6))));
  const Matrix f = qrot * b * qrot.transpose();
  REQUIRE(is_zero(Matrix(f + f.transpose())));

  const auto form = skew_canonical_euclidean(f);
  REQUIRE(form.euclid_blocks.size() == 2);
  CHECK(form.kernel_basis.size() == 2);
  const auto rates = sorted_rates(form);
  CHECK(rates[0] == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(rates[1] == doctest::Approx(3.0).epsilon(1e-9));

  // Blocks are orthonormal pairs and reconstruct the operator.
  const FloatMatrix id = FloatMatrix::Identity(6, 6);
  for (const auto& blk : form.euclid_blocks) {
    CHECK(std::abs(blk.e.norm() - 1.0) <= 1e-12);
    CHECK(std::abs(blk.f.norm() - 1.0) <= 1e-12);
    CHECK(std::abs(blk.e.dot(blk.f)) <= 1e-12);
  }
  const FloatMatrix recon = reconstruct_form(form, id);
  CHECK((to_float(f) - recon).cwiseAbs().maxCoeff() <= 1e-9);
  for (const auto& v : form.kernel_basis) CHECK((to_float(f) * v).norm() <= 1e-9);

  // Rates are isometry invariants of the operator.
  const auto plain = skew_canonical_euclidean(b);
  const auto plain_rates = sorted_rates(plain);
  for (size_t i = 0; i < plain_rates.size(); ++i)
    CHECK(std::abs(plain_rates[i] - rates[i]) <= 1e-9);
}

TEST_CASE("lorentz canonical form gates") {
  Matrix hyper = Matrix::Zero(2, 2);
  hyper(0, 1) = hyper(1, 0) = 1;
  Matrix shear = Matrix::Zero(2, 2);
  shear(0, 1) = 1;
  CHECK_THROWS_AS((void)skew_canonical_lorentz(shear, GramMatrix(hyper)), NotSkewError);
  CHECK_THROWS_AS((void)skew_canonical_lorentz(rot2(Scalar(1)),
                                               GramMatrix(Matrix::Identity(2, 2))),
                  WrongSignatureError);
  CHECK_THROWS_AS((void)skew_canonical_lorentz(Matrix::Zero(3, 3), GramMatrix(hyper)),
                  ShapeError);
}

TEST_CASE("lorentz canonical form of the zero operator") {
  Matrix mink = Matrix::Identity(2, 2);
  mink(0, 0) = -1;
  const auto form = skew_canonical_lorentz(Matrix::Zero(2, 2), GramMatrix(mink));
  CHECK(form.lorentz_case == LorentzCase::CaseI);
  REQUIRE(form.lorentz_basis.size() == 1);
  CHECK(form.euclid_blocks.empty());
  CHECK(form.kernel_basis.size() == 1);
  const FloatMatrix gf = to_float(mink);
  CHECK(std::abs(finner(gf, form.lorentz_basis[0], form.lorentz_basis[0]) + 1.0) <= 1e-9);
  CHECK(std::abs(finner(gf, form.kernel_basis[0], form.kernel_basis[0]) - 1.0) <= 1e-9);
}

TEST_CASE("lorentz canonical form boost case") {
  // Null basis: F e = alpha e, F ebar = -alpha ebar.
  Matrix hyper = Matrix::Zero(2, 2);
  hyper(0, 1) = hyper(1, 0) = 1;
  Matrix f = Matrix::Zero(2, 2);
  f(0, 0) = q("3/2");
  f(1, 1) = q("-3/2");
  const auto form = skew_canonical_lorentz(f, GramMatrix(hyper));
  CHECK(form.lorentz_case == LorentzCase::CaseII);
  CHECK(std::abs(form.alpha - 1.5) <= 1e-9);
  REQUIRE(form.lorentz_basis.size() == 2);
  CHECK(form.euclid_blocks.empty());
  CHECK(form.kernel_basis.empty());

  const FloatMatrix gf = to_float(hyper);
  const FloatMatrix ff = to_float(f);
  const FloatVector& e = form.lorentz_basis[0];
  const FloatVector& ebar = form.lorentz_basis[1];
  CHECK(std::abs(finner(gf, e, e)) <= 1e-9);
  CHECK(std::abs(finner(gf, ebar, ebar)) <= 1e-9);
  CHECK(std::abs(finner(gf, e, ebar) - 1.0) <= 1e-9);
  CHECK((ff * e - form.alpha * e).norm() <= 1e-9);
  CHECK((ff * ebar + form.alpha * ebar).norm() <= 1e-9);
  CHECK((ff - reconstruct_form(form, gf)).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("lorentz canonical form boost plus rotation in a Minkowski frame") {
  Matrix eta = Matrix::Identity(4, 4);
  eta(0, 0) = -1;
  Matrix f = Matrix::Zero(4, 4);
  f(0, 1) = f(1, 0) = 2; // boost in the (t, x1) plane
  f.block(2, 2, 2, 2) = rot2(Scalar(1));
  const auto form = skew_canonical_lorentz(f, GramMatrix(eta));
  CHECK(form.lorentz_case == LorentzCase::CaseII);
  CHECK(std::abs(form.alpha - 2.0) <= 1e-9);
  REQUIRE(form.euclid_blocks.size() == 1);
  CHECK(std::abs(form.euclid_blocks[0].alpha - 1.0) <= 1e-9);
  CHECK(form.kernel_basis.empty());
  CHECK(form_dimension(form) == 4);

  const FloatMatrix gf = to_float(eta);
  CHECK((to_float(f) - reconstruct_form(form, gf)).cwiseAbs().maxCoeff() <= 1e-9);
  // The block pair is orthonormal for the metric.
  const auto& blk = form.euclid_blocks[0];
  CHECK(std::abs(finner(gf, blk.e, blk.e) - 1.0) <= 1e-12);
  CHECK(std::abs(finner(gf, blk.f, blk.f) - 1.0) <= 1e-12);
  CHECK(std::abs(finner(gf, blk.e, blk.f)) <= 1e-12);
}

TEST_CASE("lorentz canonical form null rotation case") {
  // Basis (e, ebar, f) with F(e) = 0, F(f) = e, F(ebar) = -f.
  Matrix g3m = Matrix::Zero(3, 3);
  g3m(0, 1) = g3m(1, 0) = 1;
  g3m(2, 2) = 1;
  Matrix f = Matrix::Zero(3, 3);
  f(0, 2) = 1;
  f(2, 1) = -1;
  REQUIRE(is_skew_wrt(GramMatrix(g3m), f));

  // Conjugate by an exact isometry: boost times null rotation.
  const Scalar s = 3, t = q("2/3");
  Matrix boost = Matrix::Identity(3, 3);
  boost(0, 0) = s;
  boost(1, 1) = 1 / s;
  Matrix nullrot = Matrix::Identity(3, 3);
  nullrot(0, 1) = -t * t / 2;
  nullrot(2, 1) = -t;
  nullrot(0, 2) = t;
  const Matrix trans = boost * nullrot;
  REQUIRE(is_zero(Matrix(trans.transpose() * g3m * trans - g3m)));
  const Matrix fc = exact_inverse(trans) * f * trans;
  REQUIRE(is_skew_wrt(GramMatrix(g3m), fc));

  const auto form = skew_canonical_lorentz(fc, GramMatrix(g3m));
  CHECK(form.lorentz_case == LorentzCase::CaseIII);
  CHECK(form.alpha == 1.0);
  REQUIRE(form.lorentz_basis.size() == 3);
  CHECK(form.euclid_blocks.empty());
  CHECK(form.kernel_basis.empty());

  const FloatMatrix gf = to_float(g3m);
  const FloatMatrix ff = to_float(fc);
  const FloatVector& e = form.lorentz_basis[0];
  const FloatVector& ebar = form.lorentz_basis[1];
  const FloatVector& fvec = form.lorentz_basis[2];
  CHECK(std::abs(finner(gf, e, e)) <= 1e-9);
  CHECK(std::abs(finner(gf, ebar, ebar)) <= 1e-9);
  CHECK(std::abs(finner(gf, e, ebar) - 1.0) <= 1e-9);
  CHECK(std::abs(finner(gf, fvec, fvec) - 1.0) <= 1e-9);
  CHECK(std::abs(finner(gf, e, fvec)) <= 1e-9);
  CHECK(std::abs(finner(gf, ebar, fvec)) <= 1e-9);
  CHECK((ff * e).norm() <= 1e-9);
  CHECK((ff * fvec - form.alpha * e).norm() <= 1e-9);
  CHECK((ff * ebar + form.alpha * fvec).norm() <= 1e-9);
  CHECK((ff - reconstruct_form(form, gf)).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("lorentz canonical form null rotation with a rotation block") {
  Matrix g5 = Matrix::Zero(5, 5);
  g5(0, 1) = g5(1, 0) = 1;
  g5(2, 2) = g5(3, 3) = g5(4, 4) = 1;
  Matrix f = Matrix::Zero(5, 5);
  f(0, 2) = 1;
  f(2, 1) = -1;
  f.block(3, 3, 2, 2) = rot2(Scalar(2));
  REQUIRE(is_skew_wrt(GramMatrix(g5), f));

  Matrix trans = Matrix::Identity(5, 5);
  trans(0, 0) = q("5/2");
  trans(1, 1) = q("2/5");
  const Matrix iso = trans * pyth_rotation(5, 3, 4, q("1/4"));
  REQUIRE(is_zero(Matrix(iso.transpose() * g5 * iso - g5)));
  const Matrix fc = exact_inverse(iso) * f * iso;

  const auto form = skew_canonical_lorentz(fc, GramMatrix(g5));
  CHECK(form.lorentz_case == LorentzCase::CaseIII);
  CHECK(form.alpha == 1.0);
  REQUIRE(form.euclid_blocks.size() == 1);
  CHECK(std::abs(form.euclid_blocks[0].alpha - 2.0) <= 1e-9);
  CHECK(form.kernel_basis.empty());
  CHECK(form_dimension(form) == 5);
  CHECK((to_float(fc) - reconstruct_form(form, to_float(g5))).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("lorentz canonical form timelike kernel case") {
  Matrix eta = Matrix::Identity(4, 4);
  eta(0, 0) = -1;
  Matrix f = Matrix::Zero(4, 4);
  f.block(2, 2, 2, 2) = rot2(q("7/2"));
  const auto form = skew_canonical_lorentz(f, GramMatrix(eta));
  CHECK(form.lorentz_case == LorentzCase::CaseI);
  REQUIRE(form.lorentz_basis.size() == 1);
  REQUIRE(form.euclid_blocks.size() == 1);
  CHECK(std::abs(form.euclid_blocks[0].alpha - 3.5) <= 1e-9);
  CHECK(form.kernel_basis.size() == 1);

  const FloatMatrix gf = to_float(eta);
  // The Lorentzian vector is timelike, in the kernel, with positive gauge.
  CHECK(std::abs(finner(gf, form.lorentz_basis[0], form.lorentz_basis[0]) + 1.0) <= 1e-9);
  CHECK((to_float(f) * form.lorentz_basis[0]).norm() <= 1e-9);
  CHECK(form.lorentz_basis[0](0) > 0);
  CHECK((to_float(f) - reconstruct_form(form, gf)).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("lorentz canonical form reconstructs random skew operators") {
  Rng rng(4047);
  Matrix eta = Matrix::Identity(4, 4);
  eta(0, 0) = -1;
  const FloatMatrix gf = to_float(eta);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix w(4, 4);
    for (int i = 0; i < 4; ++i) {
      w(i, i) = 0;
      for (int j = i + 1; j < 4; ++j) {
        w(i, j) = rng.integer(-3, 3);
        w(j, i) = -w(i, j);
      }
    }
    const Matrix f = eta * w;
    REQUIRE(is_skew_wrt(GramMatrix(eta), f));
    const auto form = skew_canonical_lorentz(f, GramMatrix(eta));
    CHECK(form.lorentz_case != LorentzCase::None);
    CHECK(form_dimension(form) == 4);
    CHECK((to_float(f) - reconstruct_form(form, gf)).cwiseAbs().maxCoeff() <= 1e-9);
  }
}
