#pragma once

#include <cmath>

namespace aniso::detail {

// Cyclic Jacobi eigenvalue iteration for a dense symmetric matrix, sized for
// the small problems in this library (Gram matrices up to n=10, quadrature
// recurrence matrices up to n=16). The input is destroyed; eigenvalues land
// on the diagonal of a. If vecs is non-null it receives the accumulated
// rotations column-wise: a_original = V diag(eig) V^T with V[i*n+j] = (col j)_i.
//
// Sweeps stop when the off-diagonal Frobenius mass falls below
// 1e-14 * diagonal mass, so the tiny matrices converge to full accuracy.
template <int MaxN>
inline void jacobi_eigen_symmetric(int n, double* a, double* eig, double* vecs) {
  static_assert(MaxN >= 1);
  if (vecs) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) vecs[i * n + j] = (i == j) ? 1.0 : 0.0;
  }

  auto at = [&](int i, int j) -> double& { return a[i * n + j]; };

  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (int i = 0; i < n; ++i) {
      diag += at(i, i) * at(i, i);
      for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
    }
    if (off <= 1e-28 * (diag + off) || off == 0.0) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p), aqq = at(q, q);
        if (std::abs(apq) <= 1e-300) {
          at(p, q) = at(q, p) = 0.0;
          continue;
        }
        // Classic stable rotation: tan(2 theta) = 2 apq / (aqq - app).
        const double theta = 0.5 * (aqq - app) / apq;
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                             : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p), arq = at(r, q);
          at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
          at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
        }
        if (vecs) {
          for (int r = 0; r < n; ++r) {
            const double vrp = vecs[r * n + p], vrq = vecs[r * n + q];
            vecs[r * n + p] = vrp - s * (vrq + tau * vrp);
            vecs[r * n + q] = vrq + s * (vrp - tau * vrq);
          }
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) eig[i] = at(i, i);
}

}  // namespace aniso::detail
