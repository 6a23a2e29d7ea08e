#pragma once

#include "lorflat/linear.hpp"

#include <string>
#include <vector>

namespace lorflat {

/// Sparse bracket entry: [e_i, e_j] = sum_k coeffs(k) e_k, with i < j.
struct BracketEntry {
  int i = 0;
  int j = 0;
  Vector coeffs;
};

/// A Lie algebra given by structure constants plus a pseudo-Euclidean metric.
/// Antisymmetry of the constants is enforced at construction; the Jacobi
/// identity is a checked verdict so broken inputs can be used in tests.
class MetricLieAlgebra {
 public:
  /// Builds from the matrices of ad over the basis; column j of ad_basis[i]
  /// holds [e_i, e_j]. Rejects antisymmetry violations instead of fixing them.
  MetricLieAlgebra(std::vector<Matrix> ad_basis, GramMatrix gram,
                   std::vector<std::string> names = {});

  /// Builds from i < j entries only; the antisymmetric closure is implied.
  static MetricLieAlgebra from_brackets(int dim, const std::vector<BracketEntry>& entries,
                                        GramMatrix gram,
                                        std::vector<std::string> names = {});

  int dim() const { return m_gram.dim(); }
  const GramMatrix& gram() const { return m_gram; }
  const std::vector<std::string>& names() const { return m_names; }

  /// Matrix of ad_{e_i}.
  const Matrix& ad_basis(int i) const { return m_ad[static_cast<size_t>(i)]; }

  /// Coefficient of e_k in [e_i, e_j].
  const Scalar& c(int i, int j, int k) const { return m_ad[static_cast<size_t>(i)](k, j); }

  Vector bracket(const Vector& u, const Vector& v) const;
  Matrix ad(const Vector& u) const;

 private:
  std::vector<Matrix> m_ad;
  GramMatrix m_gram;
  std::vector<std::string> m_names;
};

/// Jacobi scan outcome; on failure (i, j, k) is the first violating triple.
struct JacobiReport {
  bool ok = true;
  int i = -1;
  int j = -1;
  int k = -1;
  Vector residual;
};

/// Checks [[u,v],w] + [[v,w],u] + [[w,u],v] = 0 on all basis triples.
JacobiReport jacobi_check(const MetricLieAlgebra& g);

/// Canonical basis of the span of all brackets.
std::vector<Vector> derived_ideal(const MetricLieAlgebra& g);

/// Canonical basis of {u : [u, v] = 0 for all v}.
std::vector<Vector> center(const MetricLieAlgebra& g);

/// True iff tr(ad_u) = 0 for every u.
bool is_unimodular(const MetricLieAlgebra& g);

/// The unique h with <h, u> = tr(ad_u) for all u.
Vector modular_vector(const MetricLieAlgebra& g);

enum class SignatureKind { Euclidean, Lorentzian, OtherPseudo };

/// Signature bucket together with the exact (neg, pos) counts.
struct SignatureClass {
  SignatureKind kind = SignatureKind::Euclidean;
  Signature sig;
};

SignatureClass classify_signature(const MetricLieAlgebra& g);

/// Rewrites the algebra in the basis formed by the columns of t, which are
/// expressed in the old coordinates. t must be invertible.
MetricLieAlgebra change_basis(const MetricLieAlgebra& g, const Matrix& t);

/// Exact equality of structure constants, metric, and dimension.
bool same_algebra(const MetricLieAlgebra& a, const MetricLieAlgebra& b);

} // namespace lorflat
