#pragma once

// Shared helpers for the test binaries: exact matrix literals, a seeded
// rational generator, and comparison utilities.

#include <doctest.h>

#include "lorflat/linear.hpp"

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace lorflat::testing {

inline Scalar q(const std::string& text) { return parse_rational(text); }

inline Matrix mat(int rows, int cols, std::initializer_list<std::string> entries) {
  REQUIRE(static_cast<int>(entries.size()) == rows * cols);
  Matrix m(rows, cols);
  auto it = entries.begin();
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = parse_rational(*it++);
  }
  return m;
}

inline Matrix mati(int rows, int cols, std::initializer_list<long> entries) {
  REQUIRE(static_cast<int>(entries.size()) == rows * cols);
  Matrix m(rows, cols);
  auto it = entries.begin();
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = Scalar(*it++);
  }
  return m;
}

inline Vector vecq(std::initializer_list<std::string> entries) {
  Vector v(static_cast<int>(entries.size()));
  int i = 0;
  for (const auto& e : entries) v(i++) = parse_rational(e);
  return v;
}

inline Vector veci(std::initializer_list<long> entries) {
  Vector v(static_cast<int>(entries.size()));
  int i = 0;
  for (long e : entries) v(i++) = Scalar(e);
  return v;
}

inline bool mat_eq(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

inline bool vec_eq(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return false;
  }
  return true;
}

// Deterministic small-rational source so property tests are reproducible.
class Rng {
 public:
  explicit Rng(unsigned long seed) : m_eng(seed) {}

  long integer(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(m_eng);
  }

  Scalar rational(long max_num = 9, long max_den = 5) {
    const long num = integer(-max_num, max_num);
    const long den = integer(1, max_den);
    return Scalar(num) / Scalar(den);
  }

  Scalar nonzero_rational(long max_num = 9, long max_den = 5) {
    for (;;) {
      Scalar s = rational(max_num, max_den);
      if (s != 0) return s;
    }
  }

  Vector vector(int n, long max_num = 9, long max_den = 5) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = rational(max_num, max_den);
    return v;
  }

  Matrix matrix(int rows, int cols, long max_num = 9, long max_den = 5) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m(i, j) = rational(max_num, max_den);
    }
    return m;
  }

  std::mt19937_64& engine() { return m_eng; }

 private:
  std::mt19937_64 m_eng;
};

} // namespace lorflat::testing
