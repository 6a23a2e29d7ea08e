#include "lorflat/levi_civita.hpp"
#include "lorflat/structure_theory.hpp"

#include <chrono>
#include <cstdio>
#include <vector>

namespace {

using namespace lorflat;

template <class F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

/// Block-diagonal rotation generator on an even-dimensional space, with
/// rates varied by the seed so two generators still commute blockwise.
Matrix rotations(int dim_u, int seed) {
  Matrix m = Matrix::Zero(dim_u, dim_u);
  for (int b = 0; 2 * b + 1 < dim_u; ++b) {
    const Scalar rate((seed + b) % 5 + 1, b % 3 + 1);
    m(2 * b, 2 * b + 1) = -rate;
    m(2 * b + 1, 2 * b) = rate;
  }
  return m;
}

bool tables_equal(const ProductTable& a, const ProductTable& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i) {
    if (a.left_basis(i) != b.left_basis(i)) return false;
  }
  return true;
}

void row(const char* kernel, int dim, double par, double ser, bool match) {
  std::printf("%-20s %5d %12.2f %12.2f %8.2fx %7s\n", kernel, dim, par, ser,
              ser / par, match ? "yes" : "NO");
}

} // namespace

int main() {
  std::printf("%-20s %5s %12s %12s %9s %7s\n", "kernel", "dim", "parallel ms",
              "serial ms", "speedup", "match");

  for (int dim_u : {10, 16, 22}) {
    const std::vector<Matrix> gens = {rotations(dim_u, 1), rotations(dim_u, 3)};
    const MetricLieAlgebra g = milnor_build(2, dim_u, gens);
    const int n = g.dim();

    ProductTable par_table = koszul_product(g);
    ProductTable ser_table = koszul_product_serial(g);
    const double t_par = time_ms([&] { par_table = koszul_product(g); });
    const double t_ser = time_ms([&] { ser_table = koszul_product_serial(g); });
    row("koszul_product", n, t_par, t_ser, tables_equal(par_table, ser_table));

    FlatnessReport fp, fs;
    const double f_par = time_ms([&] { fp = is_flat(par_table); });
    const double f_ser = time_ms([&] { fs = is_flat_serial(par_table); });
    row("is_flat", n, f_par, f_ser, fp.flat == fs.flat && fp.flat);

    bool lp = false, ls = false;
    const double l_par = time_ms([&] { lp = left_symmetric_check(par_table); });
    const double l_ser = time_ms([&] { ls = left_symmetric_check_serial(par_table); });
    row("left_symmetric", n, l_par, l_ser, lp == ls && lp);
  }
  return 0;
}
