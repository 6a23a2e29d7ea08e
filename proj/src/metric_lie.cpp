#include "lorflat/metric_lie.hpp"

#include <string>
#include <utility>

namespace lorflat {

namespace {

std::vector<std::string> default_names(int n, std::vector<std::string> names) {
  if (names.empty()) {
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  }
  if (static_cast<int>(names.size()) != n) {
    throw ShapeError("expected " + std::to_string(n) + " basis names");
  }
  return names;
}

} // namespace

MetricLieAlgebra::MetricLieAlgebra(std::vector<Matrix> ad_basis, GramMatrix gram,
                                   std::vector<std::string> names)
    : m_ad(std::move(ad_basis)),
      m_gram(std::move(gram)),
      m_names(default_names(m_gram.dim(), std::move(names))) {
  const int n = m_gram.dim();
  if (static_cast<int>(m_ad.size()) != n) {
    throw ShapeError("structure constants need one ad matrix per basis vector");
  }
  for (const Matrix& m : m_ad) {
    if (m.rows() != n || m.cols() != n) throw ShapeError("ad matrix has wrong shape");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (c(i, j, k) != -c(j, i, k)) {
          throw ShapeError("structure constants are not antisymmetric at (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
    }
  }
}

MetricLieAlgebra MetricLieAlgebra::from_brackets(int dim,
                                                 const std::vector<BracketEntry>& entries,
                                                 GramMatrix gram,
                                                 std::vector<std::string> names) {
  std::vector<Matrix> ad(static_cast<size_t>(dim), Matrix::Zero(dim, dim));
  std::vector<std::vector<bool>> seen(static_cast<size_t>(dim),
                                      std::vector<bool>(static_cast<size_t>(dim), false));
  for (const BracketEntry& e : entries) {
    if (e.i < 0 || e.j >= dim || e.i >= e.j) {
      throw ShapeError("bracket entries must satisfy 0 <= i < j < dim");
    }
    if (e.coeffs.size() != dim) throw ShapeError("bracket coefficient vector has wrong length");
    if (seen[static_cast<size_t>(e.i)][static_cast<size_t>(e.j)]) {
      throw ShapeError("duplicate bracket entry (" + std::to_string(e.i) + "," +
                       std::to_string(e.j) + ")");
    }
    seen[static_cast<size_t>(e.i)][static_cast<size_t>(e.j)] = true;
    ad[static_cast<size_t>(e.i)].col(e.j) = e.coeffs;
    ad[static_cast<size_t>(e.j)].col(e.i) = -e.coeffs;
  }
  return MetricLieAlgebra(std::move(ad), std::move(gram), std::move(names));
}

Vector MetricLieAlgebra::bracket(const Vector& u, const Vector& v) const {
  return ad(u) * v;
}

Matrix MetricLieAlgebra::ad(const Vector& u) const {
  const int n = dim();
  if (u.size() != n) throw ShapeError("ad: vector has wrong length");
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (u(i) != 0) m += u(i) * m_ad[static_cast<size_t>(i)];
  }
  return m;
}

JacobiReport jacobi_check(const MetricLieAlgebra& g) {
  const int n = g.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const Vector bij = g.ad_basis(i).col(j);
        const Vector bjk = g.ad_basis(j).col(k);
        const Vector bki = g.ad_basis(k).col(i);
        Vector r = g.ad(bij).col(k) + g.ad(bjk).col(i) + g.ad(bki).col(j);
        if (!is_zero(r)) {
          JacobiReport rep;
          rep.ok = false;
          rep.i = i;
          rep.j = j;
          rep.k = k;
          rep.residual = std::move(r);
          return rep;
        }
      }
    }
  }
  return {};
}

std::vector<Vector> derived_ideal(const MetricLieAlgebra& g) {
  std::vector<Vector> gens;
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = i + 1; j < g.dim(); ++j) gens.push_back(g.ad_basis(i).col(j));
  }
  return span_basis(gens);
}

std::vector<Vector> center(const MetricLieAlgebra& g) {
  const int n = g.dim();
  // ad(u) = sum_i u_i ad_basis(i) = 0 stacked entrywise as a linear system in u.
  Matrix sys(n * n, n);
  for (int i = 0; i < n; ++i) {
    const Matrix& b = g.ad_basis(i);
    for (int r = 0; r < n; ++r) {
      for (int cidx = 0; cidx < n; ++cidx) sys(r * n + cidx, i) = b(r, cidx);
    }
  }
  return kernel_basis(sys);
}

bool is_unimodular(const MetricLieAlgebra& g) {
  for (int i = 0; i < g.dim(); ++i) {
    if (g.ad_basis(i).trace() != 0) return false;
  }
  return true;
}

Vector modular_vector(const MetricLieAlgebra& g) {
  Vector t(g.dim());
  for (int i = 0; i < g.dim(); ++i) t(i) = g.ad_basis(i).trace();
  try {
    return solve(g.gram().mat(), t);
  } catch (const SingularError&) {
    throw DegenerateError("modular vector requires a nondegenerate metric");
  }
}

SignatureClass classify_signature(const MetricLieAlgebra& g) {
  SignatureClass out;
  out.sig = signature(g.gram());
  if (out.sig.neg == 0) {
    out.kind = SignatureKind::Euclidean;
  } else if (out.sig.neg == 1) {
    out.kind = SignatureKind::Lorentzian;
  } else {
    out.kind = SignatureKind::OtherPseudo;
  }
  return out;
}

MetricLieAlgebra change_basis(const MetricLieAlgebra& g, const Matrix& t) {
  const int n = g.dim();
  if (t.rows() != n || t.cols() != n) throw ShapeError("change of basis has wrong shape");
  const Matrix tinv = exact_inverse(t);
  std::vector<Matrix> ad;
  ad.reserve(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    Matrix m(n, n);
    for (int b = 0; b < n; ++b) m.col(b) = tinv * g.bracket(t.col(a), t.col(b));
    ad.push_back(std::move(m));
  }
  GramMatrix gram(Matrix(t.transpose() * g.gram().mat() * t));
  return MetricLieAlgebra(std::move(ad), std::move(gram), g.names());
}

bool same_algebra(const MetricLieAlgebra& a, const MetricLieAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      for (int k = 0; k < a.dim(); ++k) {
        if (a.c(i, j, k) != b.c(i, j, k)) return false;
      }
    }
  }
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (a.gram().mat()(i, j) != b.gram().mat()(i, j)) return false;
    }
  }
  return true;
}

} // namespace lorflat
