#include "lorflat/document.hpp"

#include "lorflat/errors.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace lorflat {

namespace {

using Json = nlohmann::ordered_json;

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + "." + key + ": missing field");
  return *it;
}

int int_field(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_number_integer()) throw ParseError(path + "." + key + ": expected an integer");
  return v.get<int>();
}

Scalar rational_at(const Json& v, const std::string& path) {
  if (!v.is_string()) {
    throw ParseError(path + ": rationals are strings like \"-3/4\", got " + v.dump());
  }
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Matrix matrix_at(const Json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError(path + ": expected an array of rows");
  const int rows = static_cast<int>(v.size());
  int cols = -1;
  Matrix m;
  for (int r = 0; r < rows; ++r) {
    const Json& row = v[static_cast<size_t>(r)];
    const std::string row_path = path + "[" + std::to_string(r) + "]";
    if (!row.is_array()) throw ParseError(row_path + ": expected an array");
    if (cols < 0) {
      cols = static_cast<int>(row.size());
      m = Matrix::Zero(rows, cols);
    } else if (static_cast<int>(row.size()) != cols) {
      throw ParseError(row_path + ": ragged row, expected " + std::to_string(cols) +
                       " entries");
    }
    for (int c = 0; c < cols; ++c) {
      m(r, c) = rational_at(row[static_cast<size_t>(c)],
                            row_path + "[" + std::to_string(c) + "]");
    }
  }
  if (rows == 0) m = Matrix::Zero(0, 0);
  return m;
}

Vector vector_at(const Json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError(path + ": expected an array");
  Vector out(static_cast<int>(v.size()));
  for (int i = 0; i < out.size(); ++i) {
    out(i) = rational_at(v[static_cast<size_t>(i)], path + "[" + std::to_string(i) + "]");
  }
  return out;
}

Json matrix_doc(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_doc(const Vector& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(format_rational(v(i)));
  return out;
}

MetricLieAlgebra algebra_at(const Json& j, const std::string& path) {
  const int dim = int_field(j, "dim", path);
  if (dim < 0) throw ParseError(path + ".dim: must be nonnegative");

  std::vector<std::string> names;
  if (j.is_object() && j.contains("basis")) {
    const Json& basis = j["basis"];
    if (!basis.is_array()) throw ParseError(path + ".basis: expected an array of names");
    if (static_cast<int>(basis.size()) != dim) {
      throw ParseError(path + ".basis: expected " + std::to_string(dim) + " names, got " +
                       std::to_string(basis.size()));
    }
    for (size_t k = 0; k < basis.size(); ++k) {
      if (!basis[k].is_string()) {
        throw ParseError(path + ".basis[" + std::to_string(k) + "]: expected a string");
      }
      names.push_back(basis[k].get<std::string>());
    }
  }

  std::vector<BracketEntry> entries;
  const Json& brackets = field(j, "brackets", path);
  if (!brackets.is_array()) throw ParseError(path + ".brackets: expected an array");
  for (size_t k = 0; k < brackets.size(); ++k) {
    const std::string epath = path + ".brackets[" + std::to_string(k) + "]";
    const Json& e = brackets[k];
    BracketEntry entry;
    entry.i = int_field(e, "i", epath);
    entry.j = int_field(e, "j", epath);
    if (entry.i < 0 || entry.j >= dim || entry.i >= entry.j) {
      throw ParseError(epath + ": indices must satisfy 0 <= i < j < dim");
    }
    entry.coeffs = Vector::Zero(dim);
    const Json& coeffs = field(e, "coeffs", epath);
    if (!coeffs.is_object()) {
      throw ParseError(epath + ".coeffs: expected a map from index to rational string");
    }
    for (const auto& [key, value] : coeffs.items()) {
      int idx = -1;
      try {
        size_t used = 0;
        idx = std::stoi(key, &used);
        if (used != key.size()) idx = -1;
      } catch (const std::exception&) {
        idx = -1;
      }
      if (idx < 0 || idx >= dim) {
        throw ParseError(epath + ".coeffs." + key + ": not a component index below " +
                         std::to_string(dim));
      }
      entry.coeffs(idx) = rational_at(value, epath + ".coeffs." + key);
    }
    entries.push_back(std::move(entry));
  }

  const Matrix metric = matrix_at(field(j, "metric", path), path + ".metric");
  if (metric.rows() != dim || metric.cols() != dim) {
    throw ParseError(path + ".metric: expected a " + std::to_string(dim) + "x" +
                     std::to_string(dim) + " array");
  }
  try {
    return MetricLieAlgebra::from_brackets(dim, entries, GramMatrix(metric),
                                           std::move(names));
  } catch (const ShapeError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json algebra_doc(const MetricLieAlgebra& g) {
  Json j;
  j["dim"] = g.dim();
  Json basis = Json::array();
  for (const auto& name : g.names()) basis.push_back(name);
  j["basis"] = std::move(basis);
  Json brackets = Json::array();
  for (int i = 0; i < g.dim(); ++i) {
    for (int jj = i + 1; jj < g.dim(); ++jj) {
      Json coeffs = Json::object();
      for (int k = 0; k < g.dim(); ++k) {
        if (g.c(i, jj, k) != 0) coeffs[std::to_string(k)] = format_rational(g.c(i, jj, k));
      }
      if (!coeffs.empty()) {
        Json entry;
        entry["i"] = i;
        entry["j"] = jj;
        entry["coeffs"] = std::move(coeffs);
        brackets.push_back(std::move(entry));
      }
    }
  }
  j["brackets"] = std::move(brackets);
  j["metric"] = matrix_doc(g.gram().mat());
  return j;
}

Json tuple_doc(const AdmissibleTuple& t) {
  Json j;
  j["base"] = algebra_doc(t.base);
  j["xi"] = matrix_doc(t.xi);
  j["dee"] = matrix_doc(t.dee);
  j["mu"] = format_rational(t.mu);
  j["b0"] = vector_doc(t.b0);
  return j;
}

AdmissibleTuple tuple_at(const Json& j, const std::string& path) {
  AdmissibleTuple t{algebra_at(field(j, "base", path), path + ".base"),
                    matrix_at(field(j, "xi", path), path + ".xi"),
                    matrix_at(field(j, "dee", path), path + ".dee"),
                    rational_at(field(j, "mu", path), path + ".mu"),
                    vector_at(field(j, "b0", path), path + ".b0")};
  const int m = t.base.dim();
  const auto square = [&](const Matrix& mat, const std::string& name) {
    if (mat.rows() != m || mat.cols() != m) {
      throw ParseError(path + "." + name + ": expected a " + std::to_string(m) + "x" +
                       std::to_string(m) + " array");
    }
  };
  square(t.xi, "xi");
  square(t.dee, "dee");
  if (t.b0.size() != m) {
    throw ParseError(path + ".b0: expected " + std::to_string(m) + " entries");
  }
  return t;
}

} // namespace

MetricLieAlgebra parse_algebra(const std::string& text) {
  return algebra_at(parse_text(text), "algebra");
}

std::string emit_algebra(const MetricLieAlgebra& g) { return algebra_doc(g).dump(2) + "\n"; }

AdmissibleTuple parse_tuple(const std::string& text) {
  return tuple_at(parse_text(text), "tuple");
}

std::string emit_tuple(const AdmissibleTuple& t) { return tuple_doc(t).dump(2) + "\n"; }

std::string emit_factorization(const FactorizationResult& r) {
  Json j;
  j["tuple"] = tuple_doc(r.tuple);
  j["change_of_basis"] = matrix_doc(r.change_of_basis);
  return j.dump(2) + "\n";
}

OperatorDocument parse_operator(const std::string& text) {
  const Json j = parse_text(text);
  OperatorDocument doc;
  doc.matrix = matrix_at(field(j, "matrix", "operator"), "operator.matrix");
  if (doc.matrix.rows() != doc.matrix.cols()) {
    throw ParseError("operator.matrix: expected a square array");
  }
  if (j.is_object() && j.contains("metric")) {
    Matrix metric = matrix_at(j["metric"], "operator.metric");
    if (metric.rows() != doc.matrix.rows() || metric.cols() != doc.matrix.cols()) {
      throw ParseError("operator.metric: shape differs from the matrix");
    }
    doc.metric = std::move(metric);
  }
  return doc;
}

} // namespace lorflat
