#pragma once

#include <array>

#include "aniso/errors.hpp"

namespace aniso {

// Dense 2x2 or 3x3 matrix, row-major. Entries outside dim x dim stay zero so
// 2-D matrices can be passed through 3-entry interfaces unchanged.
struct SmallMatrix {
  int dim = 2;
  std::array<std::array<double, 3>, 3> a{};

  static SmallMatrix identity(int dim);

  double& operator()(int i, int j) { return a[i][j]; }
  double operator()(int i, int j) const { return a[i][j]; }
};

SmallMatrix operator*(const SmallMatrix& l, const SmallMatrix& r);
SmallMatrix transpose(const SmallMatrix& m);

// Matrix-vector product; entries beyond dim are ignored and returned as zero.
std::array<double, 3> mat_vec(const SmallMatrix& m, const std::array<double, 3>& v);

// Cofactor-expansion determinant.
double determinant(const SmallMatrix& m);

// Inverse via the adjugate. Throws Degenerate when |det| vanishes.
SmallMatrix inverse(const SmallMatrix& m);

// Largest singular value: closed form for dim 2, cyclic Jacobi on m^T m for
// dim 3.
double two_norm(const SmallMatrix& m);

// Frobenius norm (used by tests and diagnostics).
double frobenius_norm(const SmallMatrix& m);

// Largest lambda with a v = lambda b v for symmetric a and SPD b, n <= 10.
// Reduces with a Cholesky factorization of b, then runs Jacobi sweeps.
// Matrices are row-major n*n. Relative accuracy 1e-10 or better.
inline constexpr int kMaxGramDim = 10;
double sym_generalized_eig_max(int n, const double* a, const double* b);

}  // namespace aniso
