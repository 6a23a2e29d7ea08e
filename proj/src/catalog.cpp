#include "lorflat/catalog.hpp"

#include "lorflat/levi_civita.hpp"

#include <utility>

namespace lorflat {

namespace {

GramMatrix hyperbolic_first_gram(int n) {
  Matrix g = Matrix::Zero(n, n);
  g(0, 1) = 1;
  g(1, 0) = 1;
  for (int i = 2; i < n; ++i) g(i, i) = 1;
  return GramMatrix(std::move(g));
}

std::vector<std::string> basis_names(int n) {
  std::vector<std::string> names = {"e", "ebar"};
  for (int i = 2; i < n; ++i) names.push_back("e" + std::to_string(i - 1));
  return names;
}

Vector coeffs(int n, std::initializer_list<std::pair<int, Scalar>> terms) {
  Vector v = Vector::Zero(n);
  for (const auto& [k, val] : terms) v(k) = val;
  return v;
}

void require_zero(const Scalar& value, const std::string& param, const std::string& family) {
  if (value != 0) {
    throw BadParametersError(family + " does not take parameter " + param);
  }
}

bool mat_equal(const Matrix& a, const Matrix& b) { return is_zero(Matrix(a - b)); }

bool skew_2x2(const Matrix& a) {
  return a(0, 0) == 0 && a(1, 1) == 0 && a(0, 1) == -a(1, 0);
}

} // namespace

std::string family_name(FamilyId id) {
  switch (id) {
    case FamilyId::G2: return "g2";
    case FamilyId::G3: return "g3";
    case FamilyId::G3P: return "g3p";
    case FamilyId::G4: return "g4";
    case FamilyId::G4P: return "g4p";
  }
  throw InternalError("unknown family id");
}

FamilyId parse_family(const std::string& name) {
  if (name == "g2") return FamilyId::G2;
  if (name == "g3") return FamilyId::G3;
  if (name == "g3p") return FamilyId::G3P;
  if (name == "g4") return FamilyId::G4;
  if (name == "g4p") return FamilyId::G4P;
  throw ParseError("unknown family '" + name + "' (expected g2, g3, g3p, g4, g4p)");
}

CatalogFamily g2(const Scalar& mu) {
  CatalogFamily f;
  f.id = FamilyId::G2;
  f.mu = mu;
  return f;
}

CatalogFamily g3(const Scalar& mu, const Scalar& alpha) {
  CatalogFamily f;
  f.id = FamilyId::G3;
  f.mu = mu;
  f.alpha = alpha;
  return f;
}

CatalogFamily g3p(const Scalar& mu, const Scalar& alpha) {
  CatalogFamily f;
  f.id = FamilyId::G3P;
  f.mu = mu;
  f.alpha = alpha;
  return f;
}

CatalogFamily g4(const Scalar& mu, const Scalar& lambda, const Scalar& alpha,
                 const Scalar& beta) {
  CatalogFamily f;
  f.id = FamilyId::G4;
  f.mu = mu;
  f.lambda = lambda;
  f.alpha = alpha;
  f.beta = beta;
  return f;
}

CatalogFamily g4p(int eps, const Scalar& mu, const Scalar& gamma, const Scalar& alpha,
                  const Scalar& beta) {
  CatalogFamily f;
  f.id = FamilyId::G4P;
  f.eps = eps;
  f.mu = mu;
  f.gamma = gamma;
  f.alpha = alpha;
  f.beta = beta;
  return f;
}

MetricLieAlgebra instantiate(const CatalogFamily& f) {
  const std::string fam = family_name(f.id);
  if (f.mu == 0) throw BadParametersError(fam + " requires mu != 0");
  if (f.id != FamilyId::G4P && f.eps != 0) {
    throw BadParametersError(fam + " does not take parameter eps");
  }
  if (f.id == FamilyId::G4P && f.eps != 0 && f.eps != 1) {
    throw BadParametersError("g4p requires eps in {0, 1}");
  }

  switch (f.id) {
    case FamilyId::G2: {
      require_zero(f.alpha, "alpha", fam);
      require_zero(f.beta, "beta", fam);
      require_zero(f.lambda, "lambda", fam);
      require_zero(f.gamma, "gamma", fam);
      return MetricLieAlgebra::from_brackets(
          2, {{0, 1, coeffs(2, {{0, -f.mu}})}}, hyperbolic_first_gram(2), basis_names(2));
    }
    case FamilyId::G3: {
      require_zero(f.beta, "beta", fam);
      require_zero(f.lambda, "lambda", fam);
      require_zero(f.gamma, "gamma", fam);
      return MetricLieAlgebra::from_brackets(
          3,
          {{0, 1, coeffs(3, {{0, -f.mu}})}, {1, 2, coeffs(3, {{0, f.alpha}})}},
          hyperbolic_first_gram(3), basis_names(3));
    }
    case FamilyId::G3P: {
      require_zero(f.beta, "beta", fam);
      require_zero(f.lambda, "lambda", fam);
      require_zero(f.gamma, "gamma", fam);
      return MetricLieAlgebra::from_brackets(
          3,
          {{0, 1, coeffs(3, {{0, -f.mu}})},
           {1, 2, coeffs(3, {{0, f.alpha}, {2, f.mu}})}},
          hyperbolic_first_gram(3), basis_names(3));
    }
    case FamilyId::G4: {
      require_zero(f.gamma, "gamma", fam);
      return MetricLieAlgebra::from_brackets(
          4,
          {{0, 1, coeffs(4, {{0, -f.mu}})},
           {1, 2, coeffs(4, {{0, f.alpha}, {2, f.mu}, {3, f.lambda}})},
           {1, 3, coeffs(4, {{0, f.beta}})},
           {2, 3, coeffs(4, {{0, f.lambda}})}},
          hyperbolic_first_gram(4), basis_names(4));
    }
    case FamilyId::G4P: {
      require_zero(f.lambda, "lambda", fam);
      const Scalar em = Scalar(f.eps) * f.mu;
      return MetricLieAlgebra::from_brackets(
          4,
          {{0, 1, coeffs(4, {{0, -f.mu}})},
           {1, 2, coeffs(4, {{0, f.alpha}, {2, em}, {3, f.gamma}})},
           {1, 3, coeffs(4, {{0, f.beta}, {2, -f.gamma}, {3, em}})}},
          hyperbolic_first_gram(4), basis_names(4));
    }
  }
  throw InternalError("unknown family id");
}

std::vector<SolutionBranch> solve_admissible_dim1(const Scalar& mu) {
  if (mu == 0) throw BadParametersError("solver requires mu != 0");
  std::vector<SolutionBranch> out;

  SolutionBranch zero;
  zero.name = "zero";
  zero.description = "xi = D = 0; b0 free";
  zero.base_dim = 1;
  zero.free_params = 0;
  zero.make = [](const std::vector<Scalar>&) {
    return BranchPoint{Matrix::Zero(1, 1), Matrix::Zero(1, 1)};
  };
  zero.contains = [](const Matrix& xi, const Matrix& dee) {
    return is_zero(xi) && is_zero(dee);
  };
  out.push_back(std::move(zero));

  SolutionBranch scalar;
  scalar.name = "scalar";
  scalar.description = "xi = D = mu*Id; b0 free";
  scalar.base_dim = 1;
  scalar.free_params = 0;
  scalar.make = [mu](const std::vector<Scalar>&) {
    Matrix m(1, 1);
    m(0, 0) = mu;
    return BranchPoint{m, m};
  };
  scalar.contains = [mu](const Matrix& xi, const Matrix& dee) {
    return xi(0, 0) == mu && dee(0, 0) == mu;
  };
  out.push_back(std::move(scalar));

  return out;
}

std::vector<SolutionBranch> solve_admissible_dim2(const Scalar& mu) {
  if (mu == 0) throw BadParametersError("solver requires mu != 0");
  std::vector<SolutionBranch> out;

  SolutionBranch rank_one;
  rank_one.name = "rank-one";
  rank_one.description =
      "A = 0, xi = D = [[mu,0],[lambda,0]] in an adapted orthonormal basis; "
      "lambda free; b0 free";
  rank_one.base_dim = 2;
  rank_one.free_params = 1;
  rank_one.make = [mu](const std::vector<Scalar>& p) {
    Matrix xi = Matrix::Zero(2, 2);
    xi(0, 0) = mu;
    xi(1, 0) = p.at(0);
    return BranchPoint{xi, xi};
  };
  // Rotation-invariant membership: tr and det pin the conjugacy class.
  rank_one.contains = [mu](const Matrix& xi, const Matrix& dee) {
    return mat_equal(dee, xi) && xi.trace() == mu &&
           xi(0, 0) * xi(1, 1) - xi(0, 1) * xi(1, 0) == 0;
  };
  out.push_back(std::move(rank_one));

  SolutionBranch scalar;
  scalar.name = "scalar";
  scalar.description = "xi = mu*Id, D = mu*Id + A with A skew; gamma free; b0 free";
  scalar.base_dim = 2;
  scalar.free_params = 1;
  scalar.make = [mu](const std::vector<Scalar>& p) {
    Matrix xi = Matrix::Zero(2, 2);
    xi(0, 0) = mu;
    xi(1, 1) = mu;
    Matrix dee = xi;
    dee(0, 1) = -p.at(0);
    dee(1, 0) = p.at(0);
    return BranchPoint{xi, dee};
  };
  scalar.contains = [mu](const Matrix& xi, const Matrix& dee) {
    Matrix id = Matrix::Zero(2, 2);
    id(0, 0) = mu;
    id(1, 1) = mu;
    return mat_equal(xi, id) && skew_2x2(Matrix(dee - xi));
  };
  out.push_back(std::move(scalar));

  SolutionBranch zero;
  zero.name = "zero";
  zero.description = "xi = 0, D = A skew; gamma free; b0 free";
  zero.base_dim = 2;
  zero.free_params = 1;
  zero.make = [](const std::vector<Scalar>& p) {
    Matrix dee = Matrix::Zero(2, 2);
    dee(0, 1) = -p.at(0);
    dee(1, 0) = p.at(0);
    return BranchPoint{Matrix::Zero(2, 2), dee};
  };
  zero.contains = [](const Matrix& xi, const Matrix& dee) {
    return is_zero(xi) && skew_2x2(dee);
  };
  out.push_back(std::move(zero));

  SolutionBranch diag;
  diag.name = "rank-one-diagonal";
  diag.description =
      "A = 0, xi = D = diag(mu, 0); the lambda = 0 point of the rank-one branch";
  diag.base_dim = 2;
  diag.free_params = 0;
  diag.make = [mu](const std::vector<Scalar>&) {
    Matrix xi = Matrix::Zero(2, 2);
    xi(0, 0) = mu;
    return BranchPoint{xi, xi};
  };
  diag.contains = [mu](const Matrix& xi, const Matrix& dee) {
    Matrix want = Matrix::Zero(2, 2);
    want(0, 0) = mu;
    return mat_equal(xi, want) && mat_equal(dee, want);
  };
  out.push_back(std::move(diag));

  return out;
}

bool in_admissible_set(int base_dim, const Scalar& mu, const Matrix& xi, const Matrix& dee) {
  if (xi.rows() != base_dim || xi.cols() != base_dim || dee.rows() != base_dim ||
      dee.cols() != base_dim) {
    throw ShapeError("xi and D must be base_dim x base_dim");
  }
  if (base_dim == 1) {
    return dee(0, 0) == xi(0, 0) && (xi(0, 0) == 0 || xi(0, 0) == mu);
  }
  if (base_dim == 2) {
    const Matrix a = dee - xi;
    if (!skew_2x2(a)) return false;
    if (is_zero(xi)) return true;
    Matrix muid = Matrix::Zero(2, 2);
    muid(0, 0) = mu;
    muid(1, 1) = mu;
    if (mat_equal(xi, muid)) return true;
    return is_zero(a) && xi.trace() == mu &&
           xi(0, 0) * xi(1, 1) - xi(0, 1) * xi(1, 0) == 0;
  }
  throw ShapeError("admissible set formula covers base dimensions 1 and 2 only");
}

DiscriminationReport discriminate(const MetricLieAlgebra& g) {
  DiscriminationReport rep;
  rep.dim = g.dim();
  if (rep.dim < 2 || rep.dim > 4) {
    throw NoMatchError("catalog covers dimensions 2 to 4, got " + std::to_string(rep.dim));
  }
  if (!jacobi_check(g).ok) throw NoMatchError("input violates the Jacobi identity");
  if (classify_signature(g).kind != SignatureKind::Lorentzian) {
    throw NoMatchError("catalog members are Lorentzian");
  }
  if (is_unimodular(g)) throw NoMatchError("catalog members are nonunimodular");
  const ProductTable t = koszul_product(g);
  if (!is_flat(t).flat) throw NoMatchError("catalog members are flat");

  rep.derived_dim = static_cast<int>(derived_ideal(g).size());
  rep.center_dim = static_cast<int>(center(g).size());
  rep.rh_nilpotency = nilpotency_index(right_mult(t, modular_vector(g)));

  switch (rep.dim) {
    case 2:
      rep.matches = {FamilyId::G2};
      break;
    case 3:
      if (rep.derived_dim == 1) {
        rep.matches = {FamilyId::G3};
      } else if (rep.derived_dim == 2) {
        rep.matches = {FamilyId::G3P};
      }
      break;
    case 4:
      if (rep.derived_dim == 2) {
        rep.matches = {FamilyId::G4};
      } else if (rep.derived_dim == 1 || rep.derived_dim == 3) {
        rep.matches = {FamilyId::G4P};
      }
      break;
    default:
      break;
  }
  if (rep.matches.empty()) {
    throw NoMatchError("derived ideal dimension " + std::to_string(rep.derived_dim) +
                       " matches no family in dimension " + std::to_string(rep.dim));
  }
  return rep;
}

} // namespace lorflat
