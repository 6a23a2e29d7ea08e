#pragma once

#include "lorflat/metric_lie.hpp"

#include <vector>

namespace lorflat {

/// The Levi-Civita product of a metric Lie algebra, stored as the matrices of
/// left multiplication by each basis vector. Construction validates shapes
/// only, so tests can build deliberately broken tables; koszul_product is the
/// canonical producer and re-verifies the defining identities.
class ProductTable {
 public:
  ProductTable(MetricLieAlgebra algebra, std::vector<Matrix> left);

  const MetricLieAlgebra& algebra() const { return m_algebra; }
  int dim() const { return m_algebra.dim(); }

  /// Matrix of L_{e_i}.
  const Matrix& left_basis(int i) const { return m_left[static_cast<size_t>(i)]; }

  /// The product e_i . e_j.
  Vector product_basis(int i, int j) const { return left_basis(i).col(j); }

  Vector product(const Vector& u, const Vector& v) const;

 private:
  MetricLieAlgebra m_algebra;
  std::vector<Matrix> m_left;
};

/// Solves the Koszul systems for every basis pair (parallel scan) and checks
/// the torsion and metric-compatibility identities on the result.
ProductTable koszul_product(const MetricLieAlgebra& g);

/// Reference implementation of koszul_product: plain serial loops, no
/// post-verification shortcuts. Kept for exact-equality testing and benchmarks.
ProductTable koszul_product_serial(const MetricLieAlgebra& g);

/// u.v - v.u = [u,v] on all basis pairs.
bool table_torsion_free(const ProductTable& t);

/// gram.L_u + L_u^T.gram = 0 on all basis vectors.
bool table_metric_compatible(const ProductTable& t);

/// Matrix of v -> u.v.
Matrix left_mult(const ProductTable& t, const Vector& u);

/// Matrix of v -> v.u.
Matrix right_mult(const ProductTable& t, const Vector& u);

/// K(u,v) = L_{[u,v]} - [L_u, L_v].
Matrix curvature(const ProductTable& t, const Vector& u, const Vector& v);

/// Flatness scan outcome; on failure (i, j) is the first basis pair with a
/// nonzero curvature operator, which is reported in k.
struct FlatnessReport {
  bool flat = true;
  int i = -1;
  int j = -1;
  Matrix k;
};

FlatnessReport is_flat(const ProductTable& t);
FlatnessReport is_flat(const MetricLieAlgebra& g);

/// Reference serial implementation of the flatness scan.
FlatnessReport is_flat_serial(const ProductTable& t);

/// R_{u.v} - R_v R_u = [L_u, R_v] on all basis pairs.
bool left_symmetric_check(const ProductTable& t);

/// Reference serial implementation of the left-symmetry scan.
bool left_symmetric_check_serial(const ProductTable& t);

/// Exact solution space of R_u = R_u*, linear in u.
std::vector<Vector> self_adjoint_right_space(const ProductTable& t);

/// Exact solution space of R_u = 0, linear in u.
std::vector<Vector> right_mult_kernel(const ProductTable& t);

/// True iff the orthogonal of the derived ideal equals {u : R_u = R_u*}.
bool derived_perp_characterization(const MetricLieAlgebra& g);

/// The modular vector's position relative to the derived ideal and the shape
/// of right multiplication by it.
struct ModularPropertiesReport {
  Vector h;
  bool in_derived = false;
  bool perp_derived = false;
  bool rh_self_adjoint = false;
  bool rh_nilpotent = false;
  bool all() const { return in_derived && perp_derived && rh_self_adjoint && rh_nilpotent; }
};

ModularPropertiesReport modular_properties_check(const MetricLieAlgebra& g);

/// Koszul table of a verified Riemannian flat algebra. Throws
/// NotRiemannianFlatError when the Jacobi identity, positive definiteness, or
/// flatness fails.
ProductTable riemannian_flat_table(const MetricLieAlgebra& g);

} // namespace lorflat
