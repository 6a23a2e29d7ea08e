#pragma once

#include <utility>
#include <vector>

#include "lorflat/rational.hpp"

namespace lorflat {

/// True iff every entry is exactly zero.
bool is_zero(const Matrix& m);
bool is_zero(const Vector& v);

/// Exact rank via full-pivot elimination with a zero threshold.
int exact_rank(const Matrix& m);

/// Exact inverse of a square matrix; throws SingularError if not invertible.
Matrix exact_inverse(const Matrix& m);

/// Exact solution of the square nondegenerate system a x = b.
/// Throws SingularError when a is singular.
Vector solve(const Matrix& a, const Vector& b);

/// Kernel basis of an arbitrary rectangular matrix, from the reduced row
/// echelon form: one vector per free column, unit in its free slot, free
/// columns visited in increasing index. Deterministic and exact.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Canonical basis of the span of the given vectors: the nonzero rows of the
/// reduced row echelon form of the generator matrix. Two spans are equal iff
/// their canonical bases are equal entrywise.
std::vector<Vector> span_basis(const std::vector<Vector>& generators);

/// Exact membership of v in the span of the given vectors.
bool in_span(const std::vector<Vector>& generators, const Vector& v);

/// Exact equality of two spans.
bool spans_equal(const std::vector<Vector>& a, const std::vector<Vector>& b);

/// Canonical basis of the intersection of two spans.
std::vector<Vector> span_intersection(const std::vector<Vector>& a,
                                      const std::vector<Vector>& b);

/// Symmetric bilinear form on a finite basis. Square and symmetric by
/// construction; nondegeneracy is detected by the operations that need it.
class GramMatrix {
public:
  /// Throws ShapeError unless m is square and exactly symmetric.
  explicit GramMatrix(Matrix m);

  int dim() const { return static_cast<int>(m_mat.rows()); }
  const Matrix& mat() const { return m_mat; }

  /// Pairing of two coordinate vectors under the form.
  Scalar inner(const Vector& u, const Vector& v) const;

private:
  Matrix m_mat;
};

/// Inertia counts of a nondegenerate form: (negative, positive).
struct Signature {
  int neg = 0;
  int pos = 0;
  bool operator==(const Signature&) const = default;
};

/// Change of basis p with p^T g p diagonal, plus the diagonal entries.
struct CongruenceDiagonalization {
  Matrix p;
  Vector diag;
};

/// Symmetric Gaussian congruence with hyperbolic completion for zero diagonal
/// pivots (basis vector e_k replaced by e_k + e_j when only an off-diagonal
/// pairing survives). Throws DegenerateError when a zero block is detected.
CongruenceDiagonalization congruence_diagonalize(const GramMatrix& g);

/// Signature by exact congruence diagonalization; throws DegenerateError.
Signature signature(const GramMatrix& g);

/// Adjoint of m with respect to g: the unique m* with
/// inner(m u, v) == inner(u, m* v), computed as g^{-1} m^T g.
/// Throws DegenerateError when g is degenerate.
Matrix adjoint_wrt(const GramMatrix& g, const Matrix& m);

/// True iff m* == -m with respect to g.
bool is_skew_wrt(const GramMatrix& g, const Matrix& m);

/// Exact basis of the g-orthogonal complement of the span of the given
/// vectors. An empty span yields the full space.
std::vector<Vector> orthogonal_complement(const GramMatrix& g,
                                          const std::vector<Vector>& span);

/// Columns of a matrix as a vector list, and back; small conveniences used
/// throughout the span utilities.
std::vector<Vector> columns_of(const Matrix& m);
Matrix matrix_from_columns(const std::vector<Vector>& cols, int rows);

/// Smallest k >= 1 with m^k = 0, or 0 when m^dim != 0 (m is not nilpotent).
int nilpotency_index(const Matrix& m);

} // namespace lorflat
