#include "aniso/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "aniso/jacobi_eigen.hpp"

namespace aniso {

namespace detail {

void gauss_jacobi_01(int n, int alpha, std::vector<double>& nodes, std::vector<double>& weights) {
  // Monic three-term recurrence for the weight (1-x)^alpha on [-1,1]:
  //   a_0 = -alpha/(alpha+2)
  //   a_k = -alpha^2 / ((2k+alpha)(2k+alpha+2))
  //   b_k = 4 k^2 (k+alpha)^2 / ((2k+alpha)^2 ((2k+alpha)^2 - 1))
  // with total mass mu0 = 2^(alpha+1)/(alpha+1).
  constexpr int kMaxPoints = 11;
  if (n < 1 || n > kMaxPoints) throw UnsupportedDegree("point count out of range");
  const double a = alpha;
  std::array<double, kMaxPoints * kMaxPoints> jac{};
  for (int k = 0; k < n; ++k) {
    const double ta = 2.0 * k + a;
    jac[k * n + k] = (k == 0) ? -a / (a + 2.0) : -a * a / (ta * (ta + 2.0));
    if (k >= 1) {
      const double b = 4.0 * k * k * (k + a) * (k + a) / (ta * ta * (ta * ta - 1.0));
      jac[k * n + (k - 1)] = jac[(k - 1) * n + k] = std::sqrt(b);
    }
  }

  std::array<double, kMaxPoints> eig{};
  std::array<double, kMaxPoints * kMaxPoints> vecs{};
  aniso::detail::jacobi_eigen_symmetric<kMaxPoints>(n, jac.data(), eig.data(), vecs.data());

  const double mu0 = std::pow(2.0, a + 1.0) / (a + 1.0);
  std::vector<std::pair<double, double>> pts(n);
  for (int j = 0; j < n; ++j) {
    const double v0 = vecs[0 * n + j];
    pts[j] = {eig[j], mu0 * v0 * v0};
  }
  std::sort(pts.begin(), pts.end());

  // Map [-1,1] to [0,1]: u = (1+x)/2 turns the weight into 2^(alpha+1)(1-u)^alpha.
  nodes.resize(n);
  weights.resize(n);
  const double scale = std::pow(2.0, a + 1.0);
  for (int j = 0; j < n; ++j) {
    nodes[j] = 0.5 * (1.0 + pts[j].first);
    weights[j] = pts[j].second / scale;
  }
}

}  // namespace detail

QuadratureRule make_rule(int dim, int exactness_degree) {
  if (dim != 2 && dim != 3) throw InvalidDimension("quadrature dimension must be 2 or 3");
  if (exactness_degree < 1 || exactness_degree > 20)
    throw UnsupportedDegree("exactness degree must lie in [1, 20]");

  const int n = (exactness_degree + 2) / 2;  // 2n-1 >= degree per direction
  std::vector<double> x0, w0, x1, w1, x2, w2;
  detail::gauss_jacobi_01(n, 0, x0, w0);
  detail::gauss_jacobi_01(n, 1, x1, w1);
  if (dim == 3) detail::gauss_jacobi_01(n, 2, x2, w2);

  QuadratureRule rule;
  rule.dim = dim;
  rule.exactness_degree = exactness_degree;

  if (dim == 2) {
    // x = xi (1 - eta), y = eta; Jacobian (1 - eta) absorbed by the alpha=1 rule.
    for (int je = 0; je < n; ++je) {
      for (int ji = 0; ji < n; ++ji) {
        const double x = x0[ji] * (1.0 - x1[je]);
        const double y = x1[je];
        rule.nodes.push_back({1.0 - x - y, x, y, 0.0});
        rule.weights.push_back(w0[ji] * w1[je]);
      }
    }
    return rule;
  }

  // z = zeta, y = eta (1 - zeta), x = xi (1 - eta)(1 - zeta);
  // Jacobian (1 - eta)(1 - zeta)^2 absorbed by the alpha=1 and alpha=2 rules.
  for (int jz = 0; jz < n; ++jz) {
    for (int je = 0; je < n; ++je) {
      for (int ji = 0; ji < n; ++ji) {
        const double z = x2[jz];
        const double y = x1[je] * (1.0 - z);
        const double x = x0[ji] * (1.0 - x1[je]) * (1.0 - z);
        rule.nodes.push_back({1.0 - x - y - z, x, y, z});
        rule.weights.push_back(w0[ji] * w1[je] * w2[jz]);
      }
    }
  }
  return rule;
}

double integrate(const QuadratureRule& rule, const Simplex& s,
                 const std::function<double(const Point&)>& f) {
  if (rule.dim != s.dim) throw InvalidDimension("rule and simplex dimensions differ");
  const double jac = (s.dim == 2 ? 2.0 : 6.0) * measure(s);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    Point p{s.dim, {0.0, 0.0, 0.0}};
    for (int n = 0; n <= s.dim; ++n)
      for (int c = 0; c < s.dim; ++c) p.x[c] += rule.nodes[k][n] * s.vertices[n].x[c];
    sum += rule.weights[k] * f(p);
  }
  return jac * sum;
}

}  // namespace aniso
