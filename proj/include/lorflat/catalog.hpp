#pragma once

#include "lorflat/metric_lie.hpp"

#include <functional>
#include <string>
#include <vector>

namespace lorflat {

/// The classified nonunimodular Lorentzian flat families up to dimension 4.
enum class FamilyId { G2, G3, G3P, G4, G4P };

std::string family_name(FamilyId id);
FamilyId parse_family(const std::string& name);

/// A family together with concrete rational parameter values. Only the
/// parameters a family uses may be nonzero; mu must never be zero.
struct CatalogFamily {
  FamilyId id = FamilyId::G2;
  Scalar mu = Scalar(1);
  Scalar alpha = Scalar(0);
  Scalar beta = Scalar(0);
  Scalar lambda = Scalar(0);
  Scalar gamma = Scalar(0);
  int eps = 0;
};

CatalogFamily g2(const Scalar& mu);
CatalogFamily g3(const Scalar& mu, const Scalar& alpha);
CatalogFamily g3p(const Scalar& mu, const Scalar& alpha);
CatalogFamily g4(const Scalar& mu, const Scalar& lambda, const Scalar& alpha,
                 const Scalar& beta);
CatalogFamily g4p(int eps, const Scalar& mu, const Scalar& gamma, const Scalar& alpha,
                  const Scalar& beta);

/// Builds the family member with its defining brackets and metric. The basis
/// order is (e, ebar) resp. (e, ebar, e1[, e2]) with the hyperbolic pair first.
MetricLieAlgebra instantiate(const CatalogFamily& f);

/// A concrete (xi, D) pair on the abelian Euclidean base.
struct BranchPoint {
  Matrix xi;
  Matrix dee;
};

/// One family of solutions of the admissibility equations over an abelian
/// base: an instantiation map over its free parameters plus an exact
/// membership predicate (membership is basis-rotation invariant).
struct SolutionBranch {
  std::string name;
  std::string description;
  int base_dim = 1;
  int free_params = 0;
  std::function<BranchPoint(const std::vector<Scalar>&)> make;
  std::function<bool(const Matrix& xi, const Matrix& dee)> contains;
};

/// Solution branches over the 1-dim Euclidean base: D = xi = 0 or D = xi = mu.
std::vector<SolutionBranch> solve_admissible_dim1(const Scalar& mu);

/// Solution branches over the 2-dim abelian Euclidean base.
std::vector<SolutionBranch> solve_admissible_dim2(const Scalar& mu);

/// Exact test that (xi, D) solves the admissibility equations over the
/// abelian Euclidean base of the given dimension (b0 is unconstrained there).
bool in_admissible_set(int base_dim, const Scalar& mu, const Matrix& xi, const Matrix& dee);

/// Invariants that separate the catalog families, plus the matching ids.
struct DiscriminationReport {
  int dim = 0;
  int derived_dim = 0;
  int center_dim = 0;
  int rh_nilpotency = 0;
  std::vector<FamilyId> matches;
};

/// Identifies the family of a nonunimodular Lorentzian flat algebra of
/// dimension 2 to 4. Throws NoMatchError when the input is outside the table.
DiscriminationReport discriminate(const MetricLieAlgebra& g);

} // namespace lorflat
