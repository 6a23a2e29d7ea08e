#include "lorflat/cli.hpp"

#include "lorflat/catalog.hpp"
#include "lorflat/document.hpp"
#include "lorflat/double_extension.hpp"
#include "lorflat/errors.hpp"
#include "lorflat/levi_civita.hpp"
#include "lorflat/structure_theory.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace lorflat {

namespace {

using Json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

std::string fmt_float(FloatScalar x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string combo(const Vector& v, const std::vector<std::string>& names) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    if (v(i) == 0) continue;
    if (!out.empty()) out += " + ";
    out += format_rational(v(i)) + "*" + names[static_cast<size_t>(i)];
  }
  return out.empty() ? "0" : out;
}

const char* kind_name(SignatureKind k) {
  switch (k) {
    case SignatureKind::Euclidean: return "euclidean";
    case SignatureKind::Lorentzian: return "lorentzian";
    case SignatureKind::OtherPseudo: return "pseudo";
  }
  return "unknown";
}

/// Prints the verdict block for one algebra. Returns false when a verdict
/// required by the flags fails, the metric is degenerate, the Jacobi
/// identity fails, or the structure theorem applies but does not verify.
bool check_report(const MetricLieAlgebra& g, bool as_json, bool need_flat,
                  bool need_lorentzian, bool need_nonunimodular, std::ostream& out) {
  const bool jac = jacobi_check(g).ok;

  bool degenerate = false;
  SignatureClass sig;
  try {
    sig = classify_signature(g);
  } catch (const DegenerateError&) {
    degenerate = true;
  }

  bool flat = false;
  bool unimodular = true;
  bool structure_ran = false;
  bool structure_ok = true;
  Vector h;
  if (!degenerate) {
    flat = is_flat(g).flat;
    unimodular = is_unimodular(g);
    h = modular_vector(g);
    if (jac && flat && !unimodular && sig.kind == SignatureKind::Lorentzian) {
      structure_ran = true;
      structure_ok = verify_structure_theorem(g).all();
    }
  }

  if (as_json) {
    Json doc;
    doc["dim"] = g.dim();
    doc["jacobi"] = jac;
    if (degenerate) {
      doc["degenerate"] = true;
    } else {
      doc["signature"] = {{"neg", sig.sig.neg}, {"pos", sig.sig.pos},
                          {"kind", kind_name(sig.kind)}};
      doc["flat"] = flat;
      doc["unimodular"] = unimodular;
      Json hj = Json::array();
      for (int i = 0; i < h.size(); ++i) hj.push_back(format_rational(h(i)));
      doc["h"] = std::move(hj);
      if (structure_ran) doc["structure_theorem"] = structure_ok;
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "dim: " << g.dim() << "\n";
    out << "jacobi: " << (jac ? "pass" : "fail") << "\n";
    if (degenerate) {
      out << "metric: degenerate\n";
    } else {
      out << "signature: (" << sig.sig.neg << ", " << sig.sig.pos << ") "
          << kind_name(sig.kind) << "\n";
      out << "flat: " << (flat ? "yes" : "no") << "\n";
      out << "unimodular: " << (unimodular ? "yes" : "no") << "\n";
      out << "h = " << combo(h, g.names()) << "\n";
      if (structure_ran) {
        out << "structure theorem: " << (structure_ok ? "pass" : "fail") << "\n";
      }
    }
  }

  return jac && !degenerate && (!need_flat || flat) &&
         (!need_lorentzian || sig.kind == SignatureKind::Lorentzian) &&
         (!need_nonunimodular || !unimodular) && structure_ok;
}

const char* case_name(LorentzCase c) {
  switch (c) {
    case LorentzCase::None: return "none";
    case LorentzCase::CaseI: return "I";
    case LorentzCase::CaseII: return "II";
    case LorentzCase::CaseIII: return "III";
  }
  return "unknown";
}

void print_canon_report(const SkewCanonicalForm& form, bool as_json, std::ostream& out) {
  const bool has_rate =
      form.lorentz_case == LorentzCase::CaseII || form.lorentz_case == LorentzCase::CaseIII;
  if (as_json) {
    Json doc;
    doc["case"] = case_name(form.lorentz_case);
    if (has_rate) doc["alpha"] = form.alpha;
    Json blocks = Json::array();
    for (const auto& b : form.euclid_blocks) blocks.push_back({{"rate", b.alpha}});
    doc["blocks"] = std::move(blocks);
    doc["kernel"] = form.kernel_basis.size();
    out << doc.dump(2) << "\n";
    return;
  }
  out << "case: " << case_name(form.lorentz_case) << "\n";
  if (has_rate) out << "alpha: " << fmt_float(form.alpha) << "\n";
  for (size_t k = 0; k < form.euclid_blocks.size(); ++k) {
    out << "block " << k + 1 << ": rate " << fmt_float(form.euclid_blocks[k].alpha) << "\n";
  }
  out << "kernel: " << form.kernel_basis.size() << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact calculator for flat metric Lie algebras"};
  app.name("lorflat");
  app.require_subcommand(1);

  std::string check_path;
  bool check_json = false, need_flat = false, need_lorentzian = false, need_nonuni = false;
  auto* check = app.add_subcommand("check", "verify an algebra document");
  check->add_option("path", check_path, "algebra document, - for stdin")->required();
  check->add_flag("--json", check_json, "emit the verdicts as JSON");
  check->add_flag("--flat", need_flat, "fail unless the algebra is flat");
  check->add_flag("--lorentzian", need_lorentzian, "fail unless the metric is Lorentzian");
  check->add_flag("--nonunimodular", need_nonuni, "fail unless nonunimodular");

  std::string extend_path;
  bool extend_verify = false;
  auto* extendc = app.add_subcommand("extend", "extend an admissible tuple document");
  extendc->add_option("path", extend_path, "tuple document, - for stdin")->required();
  extendc->add_flag("--verify", extend_verify, "re-check the result, report on stderr");

  std::string factor_path;
  bool factor_roundtrip = false;
  auto* factorc =
      app.add_subcommand("factor", "split off the modular direction of a flat algebra");
  factorc->add_option("path", factor_path, "algebra document, - for stdin")->required();
  factorc->add_flag("--roundtrip", factor_roundtrip, "re-extend and compare exactly");

  std::string family, mu_s, alpha_s = "0", beta_s = "0", lambda_s = "0", gamma_s = "0";
  int eps = 0;
  auto* catalogc = app.add_subcommand("catalog", "emit a classified family member");
  catalogc->add_option("family", family, "one of g2, g3, g3p, g4, g4p")->required();
  catalogc->add_option("--mu", mu_s, "modular rate, nonzero rational")->required();
  catalogc->add_option("--alpha", alpha_s, "alpha parameter");
  catalogc->add_option("--beta", beta_s, "beta parameter");
  catalogc->add_option("--lambda", lambda_s, "lambda parameter (g4)");
  catalogc->add_option("--gamma", gamma_s, "gamma parameter (g4p)");
  catalogc->add_option("--eps", eps, "epsilon in {0, 1} (g4p)");

  int solve_dim = 1;
  std::string solve_mu;
  bool solve_json = false;
  auto* solvec =
      app.add_subcommand("solve", "list the admissible solution branches over an abelian base");
  solvec->add_option("dim", solve_dim, "base dimension, 1 or 2")->required();
  solvec->add_option("--mu", solve_mu, "modular rate, nonzero rational")->required();
  solvec->add_flag("--json", solve_json, "emit the branches as JSON");

  std::string canon_path;
  bool canon_lorentz = false, canon_json = false;
  auto* canonc = app.add_subcommand("canon", "canonical form of a metric-skew operator");
  canonc->add_option("path", canon_path, "operator document, - for stdin")->required();
  canonc->add_flag("--lorentz", canon_lorentz,
                   "use the Minkowski metric when the document has none");
  canonc->add_flag("--json", canon_json, "emit the block report as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(check)) {
      const MetricLieAlgebra g = parse_algebra(read_input(check_path));
      return check_report(g, check_json, need_flat, need_lorentzian, need_nonuni, out) ? 0 : 1;
    }

    if (app.got_subcommand(extendc)) {
      const AdmissibleTuple t = parse_tuple(read_input(extend_path));
      const AdmissibilityReport rep = is_admissible(t);
      if (!rep.ok()) {
        err << "error: tuple is not admissible, failed: " << rep.failures() << "\n";
        return 1;
      }
      const ExtensionResult ext = extend(t);
      out << emit_algebra(ext.algebra);
      if (extend_verify && !check_report(ext.algebra, false, true, true, true, err)) return 1;
      return 0;
    }

    if (app.got_subcommand(factorc)) {
      const MetricLieAlgebra g = parse_algebra(read_input(factor_path));
      const FactorizationResult res = factorize(g);
      out << emit_factorization(res);
      if (factor_roundtrip) {
        const bool exact =
            same_algebra(change_basis(g, res.change_of_basis), extend(res.tuple).algebra);
        err << "roundtrip: " << (exact ? "exact" : "MISMATCH") << "\n";
        if (!exact) return 1;
      }
      return 0;
    }

    if (app.got_subcommand(catalogc)) {
      CatalogFamily f;
      f.id = parse_family(family);
      f.mu = parse_rational(mu_s);
      f.alpha = parse_rational(alpha_s);
      f.beta = parse_rational(beta_s);
      f.lambda = parse_rational(lambda_s);
      f.gamma = parse_rational(gamma_s);
      f.eps = eps;
      out << emit_algebra(instantiate(f));
      return 0;
    }

    if (app.got_subcommand(solvec)) {
      const Scalar mu = parse_rational(solve_mu);
      std::vector<SolutionBranch> branches;
      if (solve_dim == 1) {
        branches = solve_admissible_dim1(mu);
      } else if (solve_dim == 2) {
        branches = solve_admissible_dim2(mu);
      } else {
        throw ParseError("solve supports base dimension 1 or 2, got " +
                         std::to_string(solve_dim));
      }
      if (solve_json) {
        Json doc = Json::array();
        for (const auto& b : branches) {
          doc.push_back({{"name", b.name},
                         {"description", b.description},
                         {"base_dim", b.base_dim},
                         {"free_params", b.free_params}});
        }
        out << doc.dump(2) << "\n";
      } else {
        out << "branches: " << branches.size() << "\n";
        for (const auto& b : branches) {
          out << b.name << ": " << b.description << " (free parameters: " << b.free_params
              << ")\n";
        }
      }
      return 0;
    }

    if (app.got_subcommand(canonc)) {
      const OperatorDocument doc = parse_operator(read_input(canon_path));
      const int n = static_cast<int>(doc.matrix.rows());
      SkewCanonicalForm form;
      if (doc.metric) {
        const GramMatrix gm(*doc.metric);
        const Signature s = signature(gm);
        if (s == Signature{1, n - 1}) {
          form = skew_canonical_lorentz(doc.matrix, gm);
        } else if (is_zero(Matrix(*doc.metric - Matrix::Identity(n, n)))) {
          form = skew_canonical_euclidean(doc.matrix);
        } else {
          throw WrongSignatureError("metric must be Lorentzian or the identity");
        }
      } else if (canon_lorentz) {
        Matrix mink = Matrix::Identity(n, n);
        if (n > 0) mink(0, 0) = -1;
        form = skew_canonical_lorentz(doc.matrix, GramMatrix(std::move(mink)));
      } else {
        form = skew_canonical_euclidean(doc.matrix);
      }
      print_canon_report(form, canon_json, out);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadParametersError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  err << "error: no command selected\n";
  return 2;
}

} // namespace lorflat
