#include "lorflat/linear.hpp"

#include <Eigen/LU>

#include <string>
#include <utility>

namespace lorflat {

namespace {

// Reduced row echelon form with first-nonzero pivoting. Unique for a given
// input, which makes every basis derived from it canonical.
Matrix rref(Matrix m, std::vector<int>& pivot_cols) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  pivot_cols.clear();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r) m.row(r).swap(m.row(pr));
    const Scalar inv = Scalar(1) / m(r, c);
    m.row(r) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar f = m(i, c);
      m.row(i) -= f * m.row(r);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return m;
}

} // namespace

bool is_zero(const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) return false;
    }
  }
  return true;
}

bool is_zero(const Vector& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return false;
  }
  return true;
}

int exact_rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(Scalar(0));
  return static_cast<int>(lu.rank());
}

Matrix exact_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse requires a square matrix");
  if (m.rows() == 0) return m;
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(Scalar(0));
  if (lu.rank() != m.rows()) throw SingularError("matrix is singular");
  return lu.inverse();
}

Vector solve(const Matrix& a, const Vector& b) {
  if (a.rows() != a.cols()) throw ShapeError("solve requires a square system");
  if (a.rows() != b.size()) throw ShapeError("system and right-hand side differ in size");
  if (a.rows() == 0) return b;
  Eigen::FullPivLU<Matrix> lu(a);
  lu.setThreshold(Scalar(0));
  if (lu.rank() != a.rows()) throw SingularError("system matrix is singular");
  return lu.solve(b);
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const int cols = static_cast<int>(m.cols());
  std::vector<int> piv;
  const Matrix r = rref(m, piv);
  std::vector<bool> is_piv(static_cast<size_t>(cols), false);
  for (int c : piv) is_piv[static_cast<size_t>(c)] = true;
  std::vector<Vector> out;
  for (int c = 0; c < cols; ++c) {
    if (is_piv[static_cast<size_t>(c)]) continue;
    Vector v = Vector::Zero(cols);
    v(c) = 1;
    for (size_t k = 0; k < piv.size(); ++k) v(piv[k]) = -r(static_cast<int>(k), c);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> span_basis(const std::vector<Vector>& generators) {
  if (generators.empty()) return {};
  const int n = static_cast<int>(generators[0].size());
  Matrix m(static_cast<int>(generators.size()), n);
  for (size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != n) throw ShapeError("span generators differ in dimension");
    m.row(static_cast<int>(i)) = generators[i].transpose();
  }
  std::vector<int> piv;
  const Matrix r = rref(std::move(m), piv);
  std::vector<Vector> out;
  for (size_t k = 0; k < piv.size(); ++k) out.push_back(r.row(static_cast<int>(k)).transpose());
  return out;
}

bool in_span(const std::vector<Vector>& generators, const Vector& v) {
  if (generators.empty()) return is_zero(v);
  const auto basis = span_basis(generators);
  Vector w = v;
  for (const Vector& b : basis) {
    int pivot = -1;
    for (int c = 0; c < b.size(); ++c) {
      if (b(c) != 0) {
        pivot = c;
        break;
      }
    }
    // RREF rows have a unit leading entry, so one subtraction clears the slot.
    if (pivot >= 0 && w(pivot) != 0) w -= w(pivot) * b;
  }
  return is_zero(w);
}

bool spans_equal(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  const auto ca = span_basis(a);
  const auto cb = span_basis(b);
  if (ca.size() != cb.size()) return false;
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].size() != cb[i].size()) return false;
    for (int k = 0; k < ca[i].size(); ++k) {
      if (ca[i](k) != cb[i](k)) return false;
    }
  }
  return true;
}

std::vector<Vector> span_intersection(const std::vector<Vector>& a,
                                      const std::vector<Vector>& b) {
  const auto ba = span_basis(a);
  const auto bb = span_basis(b);
  if (ba.empty() || bb.empty()) return {};
  const int n = static_cast<int>(ba[0].size());
  const int p = static_cast<int>(ba.size());
  const int q = static_cast<int>(bb.size());
  Matrix m(n, p + q);
  for (int j = 0; j < p; ++j) m.col(j) = ba[static_cast<size_t>(j)];
  for (int j = 0; j < q; ++j) m.col(p + j) = -bb[static_cast<size_t>(j)];
  std::vector<Vector> out;
  for (const Vector& k : kernel_basis(m)) {
    Vector v = Vector::Zero(n);
    for (int j = 0; j < p; ++j) v += k(j) * ba[static_cast<size_t>(j)];
    out.push_back(std::move(v));
  }
  return span_basis(out);
}

GramMatrix::GramMatrix(Matrix m) : m_mat(std::move(m)) {
  if (m_mat.rows() != m_mat.cols()) throw ShapeError("gram matrix must be square");
  for (int i = 0; i < m_mat.rows(); ++i) {
    for (int j = i + 1; j < m_mat.cols(); ++j) {
      if (m_mat(i, j) != m_mat(j, i)) throw ShapeError("gram matrix must be symmetric");
    }
  }
}

Scalar GramMatrix::inner(const Vector& u, const Vector& v) const {
  if (u.size() != dim() || v.size() != dim()) throw ShapeError("inner: dimension mismatch");
  Scalar acc(0);
  const Vector gv = m_mat * v;
  for (int i = 0; i < dim(); ++i) acc += u(i) * gv(i);
  return acc;
}

CongruenceDiagonalization congruence_diagonalize(const GramMatrix& g) {
  const int n = g.dim();
  Matrix a = g.mat();
  Matrix p = Matrix::Identity(n, n);
  for (int k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      int jd = -1;
      for (int j = k + 1; j < n; ++j) {
        if (a(j, j) != 0) {
          jd = j;
          break;
        }
      }
      if (jd >= 0) {
        a.row(k).swap(a.row(jd));
        a.col(k).swap(a.col(jd));
        p.col(k).swap(p.col(jd));
      } else {
        int jo = -1;
        for (int j = k + 1; j < n; ++j) {
          if (a(k, j) != 0) {
            jo = j;
            break;
          }
        }
        if (jo < 0) {
          throw DegenerateError("degenerate form: zero block at index " + std::to_string(k));
        }
        // Hyperbolic completion: every trailing square is zero but e_k pairs
        // with e_jo, so e_k + e_jo has square 2<e_k,e_jo> != 0.
        a.col(k) += a.col(jo);
        a.row(k) += a.row(jo);
        p.col(k) += p.col(jo);
      }
    }
    const Scalar piv = a(k, k);
    for (int j = k + 1; j < n; ++j) {
      if (a(k, j) == 0) continue;
      const Scalar f = a(k, j) / piv;
      a.col(j) -= f * a.col(k);
      a.row(j) -= f * a.row(k);
      p.col(j) -= f * p.col(k);
    }
  }
  CongruenceDiagonalization out;
  out.p = std::move(p);
  out.diag = a.diagonal();
  return out;
}

Signature signature(const GramMatrix& g) {
  const CongruenceDiagonalization cd = congruence_diagonalize(g);
  Signature s;
  for (int i = 0; i < cd.diag.size(); ++i) {
    if (cd.diag(i) < 0) {
      ++s.neg;
    } else {
      ++s.pos;
    }
  }
  return s;
}

Matrix adjoint_wrt(const GramMatrix& g, const Matrix& m) {
  if (m.rows() != g.dim() || m.cols() != g.dim()) {
    throw ShapeError("adjoint: operator and form differ in dimension");
  }
  Matrix ginv;
  try {
    ginv = exact_inverse(g.mat());
  } catch (const SingularError&) {
    throw DegenerateError("adjoint requires a nondegenerate form");
  }
  return ginv * m.transpose() * g.mat();
}

bool is_skew_wrt(const GramMatrix& g, const Matrix& m) {
  // m* = -m is equivalent to g m + m^T g = 0, which avoids the inversion.
  if (m.rows() != g.dim() || m.cols() != g.dim()) {
    throw ShapeError("skew test: operator and form differ in dimension");
  }
  return is_zero(Matrix(g.mat() * m + m.transpose() * g.mat()));
}

std::vector<Vector> orthogonal_complement(const GramMatrix& g,
                                          const std::vector<Vector>& span) {
  const int n = g.dim();
  Matrix constraints(static_cast<int>(span.size()), n);
  for (size_t i = 0; i < span.size(); ++i) {
    if (span[i].size() != n) throw ShapeError("orthogonal complement: dimension mismatch");
    constraints.row(static_cast<int>(i)) = (g.mat() * span[i]).transpose();
  }
  return kernel_basis(constraints);
}

std::vector<Vector> columns_of(const Matrix& m) {
  std::vector<Vector> out;
  out.reserve(static_cast<size_t>(m.cols()));
  for (int j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

Matrix matrix_from_columns(const std::vector<Vector>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ShapeError("matrix_from_columns: ragged columns");
    m.col(static_cast<int>(j)) = cols[j];
  }
  return m;
}

int nilpotency_index(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("nilpotency index requires a square matrix");
  const int n = static_cast<int>(m.rows());
  Matrix power = m;
  for (int k = 1; k <= n; ++k) {
    if (is_zero(power)) return k;
    power = power * m;
  }
  return 0;
}

} // namespace lorflat
