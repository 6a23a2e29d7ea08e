#include "lorflat/levi_civita.hpp"

#include <utility>

namespace lorflat {

namespace {

Matrix koszul_rhs_matrix(const MetricLieAlgebra& g, int i,
                         const std::vector<Matrix>& gram_ad) {
  // Column j holds the vector k -> 2<e_i.e_j, e_k> assembled from the brackets.
  const int n = g.dim();
  Matrix rhs(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      rhs(k, j) = gram_ad[static_cast<size_t>(i)](k, j) +
                  gram_ad[static_cast<size_t>(k)](j, i) +
                  gram_ad[static_cast<size_t>(k)](i, j);
    }
  }
  return rhs;
}

std::vector<Matrix> gram_times_ad(const MetricLieAlgebra& g) {
  // gram_ad[i](k, j) = <[e_i, e_j], e_k>.
  std::vector<Matrix> out;
  out.reserve(static_cast<size_t>(g.dim()));
  for (int i = 0; i < g.dim(); ++i) out.push_back(g.gram().mat() * g.ad_basis(i));
  return out;
}

Matrix gram_inverse(const MetricLieAlgebra& g) {
  try {
    return exact_inverse(g.gram().mat());
  } catch (const SingularError&) {
    throw DegenerateError("Koszul systems require a nondegenerate metric");
  }
}

void verify_table(const ProductTable& t) {
  if (!table_torsion_free(t)) throw InternalError("Koszul table violates torsion identity");
  if (!table_metric_compatible(t)) {
    throw InternalError("Koszul table violates metric compatibility");
  }
}

} // namespace

ProductTable::ProductTable(MetricLieAlgebra algebra, std::vector<Matrix> left)
    : m_algebra(std::move(algebra)), m_left(std::move(left)) {
  const int n = m_algebra.dim();
  if (static_cast<int>(m_left.size()) != n) {
    throw ShapeError("product table needs one left matrix per basis vector");
  }
  for (const Matrix& m : m_left) {
    if (m.rows() != n || m.cols() != n) throw ShapeError("left matrix has wrong shape");
  }
}

Vector ProductTable::product(const Vector& u, const Vector& v) const {
  return left_mult(*this, u) * v;
}

ProductTable koszul_product(const MetricLieAlgebra& g) {
  const int n = g.dim();
  const Matrix ginv = gram_inverse(g);
  const auto gram_ad = gram_times_ad(g);
  std::vector<Matrix> left(static_cast<size_t>(n), Matrix::Zero(n, n));

#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const Matrix rhs = koszul_rhs_matrix(g, i, gram_ad);
    left[static_cast<size_t>(i)] = ginv * rhs / Scalar(2);
  }

  ProductTable t(g, std::move(left));
  verify_table(t);
  return t;
}

ProductTable koszul_product_serial(const MetricLieAlgebra& g) {
  const int n = g.dim();
  const Matrix ginv = gram_inverse(g);
  std::vector<Matrix> left;
  left.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Matrix li(n, n);
    for (int j = 0; j < n; ++j) {
      Vector rhs(n);
      for (int k = 0; k < n; ++k) {
        Vector ek = Vector::Zero(n);
        ek(k) = 1;
        Vector ei = Vector::Zero(n);
        ei(i) = 1;
        Vector ej = Vector::Zero(n);
        ej(j) = 1;
        rhs(k) = g.gram().inner(g.bracket(ei, ej), ek) +
                 g.gram().inner(g.bracket(ek, ei), ej) +
                 g.gram().inner(g.bracket(ek, ej), ei);
      }
      li.col(j) = ginv * rhs / Scalar(2);
    }
    left.push_back(std::move(li));
  }
  ProductTable t(g, std::move(left));
  verify_table(t);
  return t;
}

bool table_torsion_free(const ProductTable& t) {
  const int n = t.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vector lhs = t.product_basis(i, j) - t.product_basis(j, i);
      if (!is_zero(Vector(lhs - t.algebra().ad_basis(i).col(j)))) return false;
    }
  }
  return true;
}

bool table_metric_compatible(const ProductTable& t) {
  const Matrix& gm = t.algebra().gram().mat();
  for (int i = 0; i < t.dim(); ++i) {
    const Matrix& li = t.left_basis(i);
    if (!is_zero(Matrix(gm * li + li.transpose() * gm))) return false;
  }
  return true;
}

Matrix left_mult(const ProductTable& t, const Vector& u) {
  const int n = t.dim();
  if (u.size() != n) throw ShapeError("left_mult: vector has wrong length");
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (u(i) != 0) m += u(i) * t.left_basis(i);
  }
  return m;
}

Matrix right_mult(const ProductTable& t, const Vector& u) {
  const int n = t.dim();
  if (u.size() != n) throw ShapeError("right_mult: vector has wrong length");
  Matrix m(n, n);
  for (int j = 0; j < n; ++j) m.col(j) = t.left_basis(j) * u;
  return m;
}

Matrix curvature(const ProductTable& t, const Vector& u, const Vector& v) {
  const Matrix lu = left_mult(t, u);
  const Matrix lv = left_mult(t, v);
  return left_mult(t, t.algebra().bracket(u, v)) - (lu * lv - lv * lu);
}

FlatnessReport is_flat(const ProductTable& t) {
  const int n = t.dim();
  int best = n * n;

#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (int p = 0; p < n * n; ++p) {
    const int i = p / n;
    const int j = p % n;
    if (j <= i) continue;
    const Matrix& li = t.left_basis(i);
    const Matrix& lj = t.left_basis(j);
    Matrix k = -(li * lj - lj * li);
    const Vector br = t.algebra().ad_basis(i).col(j);
    for (int a = 0; a < n; ++a) {
      if (br(a) != 0) k += br(a) * t.left_basis(a);
    }
    if (!is_zero(k) && p < best) best = p;
  }

  FlatnessReport rep;
  if (best < n * n) {
    rep.flat = false;
    rep.i = best / n;
    rep.j = best % n;
    Vector ei = Vector::Zero(n);
    ei(rep.i) = 1;
    Vector ej = Vector::Zero(n);
    ej(rep.j) = 1;
    rep.k = curvature(t, ei, ej);
  }
  return rep;
}

FlatnessReport is_flat(const MetricLieAlgebra& g) { return is_flat(koszul_product(g)); }

FlatnessReport is_flat_serial(const ProductTable& t) {
  const int n = t.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Vector ei = Vector::Zero(n);
      ei(i) = 1;
      Vector ej = Vector::Zero(n);
      ej(j) = 1;
      const Matrix k = curvature(t, ei, ej);
      if (!is_zero(k)) {
        FlatnessReport rep;
        rep.flat = false;
        rep.i = i;
        rep.j = j;
        rep.k = k;
        return rep;
      }
    }
  }
  return {};
}

bool left_symmetric_check(const ProductTable& t) {
  const int n = t.dim();
  bool ok = true;

#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
  for (int p = 0; p < n * n; ++p) {
    const int i = p / n;
    const int j = p % n;
    Vector ei = Vector::Zero(n);
    ei(i) = 1;
    Vector ej = Vector::Zero(n);
    ej(j) = 1;
    const Matrix ri = right_mult(t, ei);
    const Matrix rj = right_mult(t, ej);
    const Matrix li = left_mult(t, ei);
    const Matrix lhs = right_mult(t, t.product_basis(i, j)) - rj * ri;
    const Matrix rhs = li * rj - rj * li;
    ok = ok && is_zero(Matrix(lhs - rhs));
  }
  return ok;
}

bool left_symmetric_check_serial(const ProductTable& t) {
  const int n = t.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vector ei = Vector::Zero(n);
      ei(i) = 1;
      Vector ej = Vector::Zero(n);
      ej(j) = 1;
      const Matrix ri = right_mult(t, ei);
      const Matrix rj = right_mult(t, ej);
      const Matrix li = left_mult(t, ei);
      const Matrix lhs = right_mult(t, t.product_basis(i, j)) - rj * ri;
      const Matrix rhs = li * rj - rj * li;
      if (!is_zero(Matrix(lhs - rhs))) return false;
    }
  }
  return true;
}

std::vector<Vector> self_adjoint_right_space(const ProductTable& t) {
  const int n = t.dim();
  // R_u - R_u* is linear in u; stack its entries over the basis directions.
  Matrix sys(n * n, n);
  for (int i = 0; i < n; ++i) {
    Vector ei = Vector::Zero(n);
    ei(i) = 1;
    const Matrix ri = right_mult(t, ei);
    const Matrix diff = ri - adjoint_wrt(t.algebra().gram(), ri);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) sys(r * n + c, i) = diff(r, c);
    }
  }
  return kernel_basis(sys);
}

std::vector<Vector> right_mult_kernel(const ProductTable& t) {
  const int n = t.dim();
  Matrix sys(n * n, n);
  for (int i = 0; i < n; ++i) {
    Vector ei = Vector::Zero(n);
    ei(i) = 1;
    const Matrix ri = right_mult(t, ei);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) sys(r * n + c, i) = ri(r, c);
    }
  }
  return kernel_basis(sys);
}

bool derived_perp_characterization(const MetricLieAlgebra& g) {
  const ProductTable t = koszul_product(g);
  const auto perp = orthogonal_complement(g.gram(), derived_ideal(g));
  return spans_equal(perp, self_adjoint_right_space(t));
}

ModularPropertiesReport modular_properties_check(const MetricLieAlgebra& g) {
  const ProductTable t = koszul_product(g);
  ModularPropertiesReport rep;
  rep.h = modular_vector(g);
  const auto derived = derived_ideal(g);
  rep.in_derived = in_span(derived, rep.h);
  rep.perp_derived = true;
  for (const Vector& d : derived) {
    if (g.gram().inner(rep.h, d) != 0) rep.perp_derived = false;
  }
  const Matrix rh = right_mult(t, rep.h);
  rep.rh_self_adjoint = is_zero(Matrix(rh - adjoint_wrt(g.gram(), rh)));
  rep.rh_nilpotent = nilpotency_index(rh) > 0;
  return rep;
}

ProductTable riemannian_flat_table(const MetricLieAlgebra& g) {
  if (!jacobi_check(g).ok)
    throw NotRiemannianFlatError("algebra does not satisfy the Jacobi identity");
  if (classify_signature(g).kind != SignatureKind::Euclidean)
    throw NotRiemannianFlatError("metric is not positive definite");
  ProductTable table = koszul_product(g);
  if (!is_flat(table).flat) throw NotRiemannianFlatError("algebra is not flat");
  return table;
}

} // namespace lorflat
