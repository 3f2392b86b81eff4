#include "aniso/smallmat.hpp"

#include <algorithm>
#include <cmath>

#include "aniso/jacobi_eigen.hpp"

namespace aniso {

SmallMatrix SmallMatrix::identity(int dim) {
  SmallMatrix m;
  m.dim = dim;
  for (int i = 0; i < dim; ++i) m.a[i][i] = 1.0;
  return m;
}

SmallMatrix operator*(const SmallMatrix& l, const SmallMatrix& r) {
  SmallMatrix out;
  out.dim = l.dim;
  for (int i = 0; i < l.dim; ++i)
    for (int j = 0; j < l.dim; ++j) {
      double s = 0.0;
      for (int k = 0; k < l.dim; ++k) s += l.a[i][k] * r.a[k][j];
      out.a[i][j] = s;
    }
  return out;
}

SmallMatrix transpose(const SmallMatrix& m) {
  SmallMatrix out;
  out.dim = m.dim;
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) out.a[i][j] = m.a[j][i];
  return out;
}

std::array<double, 3> mat_vec(const SmallMatrix& m, const std::array<double, 3>& v) {
  std::array<double, 3> out{};
  for (int i = 0; i < m.dim; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.dim; ++j) s += m.a[i][j] * v[j];
    out[i] = s;
  }
  return out;
}

double determinant(const SmallMatrix& m) {
  if (m.dim == 2) return m.a[0][0] * m.a[1][1] - m.a[0][1] * m.a[1][0];
  return m.a[0][0] * (m.a[1][1] * m.a[2][2] - m.a[1][2] * m.a[2][1]) -
         m.a[0][1] * (m.a[1][0] * m.a[2][2] - m.a[1][2] * m.a[2][0]) +
         m.a[0][2] * (m.a[1][0] * m.a[2][1] - m.a[1][1] * m.a[2][0]);
}

SmallMatrix inverse(const SmallMatrix& m) {
  const double det = determinant(m);
  if (det == 0.0) throw Degenerate("matrix is singular");
  SmallMatrix out;
  out.dim = m.dim;
  if (m.dim == 2) {
    out.a[0][0] = m.a[1][1] / det;
    out.a[0][1] = -m.a[0][1] / det;
    out.a[1][0] = -m.a[1][0] / det;
    out.a[1][1] = m.a[0][0] / det;
    return out;
  }
  // Adjugate over determinant.
  out.a[0][0] = (m.a[1][1] * m.a[2][2] - m.a[1][2] * m.a[2][1]) / det;
  out.a[0][1] = (m.a[0][2] * m.a[2][1] - m.a[0][1] * m.a[2][2]) / det;
  out.a[0][2] = (m.a[0][1] * m.a[1][2] - m.a[0][2] * m.a[1][1]) / det;
  out.a[1][0] = (m.a[1][2] * m.a[2][0] - m.a[1][0] * m.a[2][2]) / det;
  out.a[1][1] = (m.a[0][0] * m.a[2][2] - m.a[0][2] * m.a[2][0]) / det;
  out.a[1][2] = (m.a[0][2] * m.a[1][0] - m.a[0][0] * m.a[1][2]) / det;
  out.a[2][0] = (m.a[1][0] * m.a[2][1] - m.a[1][1] * m.a[2][0]) / det;
  out.a[2][1] = (m.a[0][1] * m.a[2][0] - m.a[0][0] * m.a[2][1]) / det;
  out.a[2][2] = (m.a[0][0] * m.a[1][1] - m.a[0][1] * m.a[1][0]) / det;
  return out;
}

double two_norm(const SmallMatrix& m) {
  if (m.dim == 2) {
    // Eigenvalues of m^T m in closed form.
    const double g00 = m.a[0][0] * m.a[0][0] + m.a[1][0] * m.a[1][0];
    const double g01 = m.a[0][0] * m.a[0][1] + m.a[1][0] * m.a[1][1];
    const double g11 = m.a[0][1] * m.a[0][1] + m.a[1][1] * m.a[1][1];
    const double tr = g00 + g11;
    const double disc = std::sqrt(std::max(0.0, (g00 - g11) * (g00 - g11) + 4.0 * g01 * g01));
    return std::sqrt(std::max(0.0, 0.5 * (tr + disc)));
  }
  double g[9];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += m.a[k][i] * m.a[k][j];
      g[i * 3 + j] = s;
    }
  double eig[3];
  detail::jacobi_eigen_symmetric<3>(3, g, eig, nullptr);
  return std::sqrt(std::max({eig[0], eig[1], eig[2], 0.0}));
}

double frobenius_norm(const SmallMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) s += m.a[i][j] * m.a[i][j];
  return std::sqrt(s);
}

double sym_generalized_eig_max(int n, const double* a, const double* b) {
  if (n < 1 || n > kMaxGramDim) throw InvalidDimension("generalized eigenproblem capped at n=10");

  // Cholesky b = L L^T.
  double l[kMaxGramDim][kMaxGramDim] = {};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = b[i * n + j];
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (s <= 0.0) throw NotPositiveDefinite("Cholesky pivot <= 0");
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }

  // c = L^{-1} a L^{-T}, built by two triangular solves.
  double w[kMaxGramDim][kMaxGramDim];  // w = L^{-1} a
  for (int col = 0; col < n; ++col) {
    for (int i = 0; i < n; ++i) {
      double s = a[i * n + col];
      for (int k = 0; k < i; ++k) s -= l[i][k] * w[k][col];
      w[i][col] = s / l[i][i];
    }
  }
  double c[kMaxGramDim * kMaxGramDim];  // c = w L^{-T}, i.e. solve c L^T = w row-wise
  for (int row = 0; row < n; ++row) {
    for (int j = 0; j < n; ++j) {
      double s = w[row][j];
      for (int k = 0; k < j; ++k) s -= c[row * n + k] * l[j][k];
      c[row * n + j] = s / l[j][j];
    }
  }
  // Symmetrize away roundoff before the Jacobi sweeps.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double s = 0.5 * (c[i * n + j] + c[j * n + i]);
      c[i * n + j] = c[j * n + i] = s;
    }

  double eig[kMaxGramDim];
  detail::jacobi_eigen_symmetric<kMaxGramDim>(n, c, eig, nullptr);
  return *std::max_element(eig, eig + n);
}

}  // namespace aniso
