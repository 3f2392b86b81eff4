#include "aniso/interpolation.hpp"

#include <algorithm>
#include <cmath>

namespace aniso {

namespace {

// Columns are v_j - v_0; barycentric coordinates 1..d solve E * l = p - v0.
SmallMatrix edge_matrix(const Simplex& s) {
  SmallMatrix e;
  e.dim = s.dim;
  for (int j = 1; j <= s.dim; ++j)
    for (int i = 0; i < s.dim; ++i) e.a[i][j - 1] = s.vertices[j].x[i] - s.vertices[0].x[i];
  return e;
}

Point combine(const Simplex& s, const std::array<double, 4>& lambda) {
  Point p{s.dim, {0.0, 0.0, 0.0}};
  for (int n = 0; n <= s.dim; ++n)
    for (int k = 0; k < s.dim; ++k) p.x[k] += lambda[n] * s.vertices[n].x[k];
  return p;
}

// Barycentric descriptions of the nodes, in the order interpolation_nodes
// lists them.
std::vector<std::array<double, 4>> node_lambdas(int dim, const OperatorSpec& spec) {
  std::vector<std::array<double, 4>> out;
  if (spec.kind == ElementKind::Lagrange) {
    for (int i = 0; i <= dim; ++i) {
      std::array<double, 4> l{};
      l[i] = 1.0;
      out.push_back(l);
    }
    if (spec.k == 2) {
      for (int i = 0; i <= dim; ++i) {
        for (int j = i + 1; j <= dim; ++j) {
          std::array<double, 4> l{};
          l[i] = 0.5;
          l[j] = 0.5;
          out.push_back(l);
        }
      }
    }
    return out;
  }
  // Crouzeix-Raviart: facet barycenters, facets in lexicographic vertex-subset
  // order, i.e. omitted vertex d, d-1, ..., 0.
  for (int omit = dim; omit >= 0; --omit) {
    std::array<double, 4> l{};
    for (int i = 0; i <= dim; ++i) l[i] = (i == omit) ? 0.0 : 1.0 / dim;
    out.push_back(l);
  }
  return out;
}

int exponent_index(const std::vector<std::array<int, 4>>& basis, const std::array<int, 4>& kappa) {
  const auto it = std::find(basis.begin(), basis.end(), kappa);
  return static_cast<int>(it - basis.begin());
}

}  // namespace

void OperatorSpec::validate() const {
  if (kind == ElementKind::Lagrange) {
    if (k != 1 && k != 2) throw UnsupportedDegree("Lagrange degree must be 1 or 2");
  } else {
    if (k != 1) throw UnsupportedDegree("Crouzeix-Raviart is affine (k = 1)");
  }
}

std::array<double, 4> barycentric(const Simplex& s, const Point& p) {
  measure(s);  // degeneracy gate
  const SmallMatrix einv = inverse(edge_matrix(s));
  std::array<double, 3> rel{};
  for (int k = 0; k < s.dim; ++k) rel[k] = p.x[k] - s.vertices[0].x[k];
  const auto l = mat_vec(einv, rel);
  std::array<double, 4> out{};
  double sum = 0.0;
  for (int j = 1; j <= s.dim; ++j) {
    out[j] = l[j - 1];
    sum += l[j - 1];
  }
  out[0] = 1.0 - sum;
  return out;
}

std::array<std::array<double, 3>, 4> barycentric_gradients(const Simplex& s) {
  measure(s);
  const SmallMatrix einv = inverse(edge_matrix(s));
  std::array<std::array<double, 3>, 4> g{};
  for (int j = 1; j <= s.dim; ++j) {
    for (int k = 0; k < s.dim; ++k) {
      g[j][k] = einv.a[j - 1][k];
      g[0][k] -= einv.a[j - 1][k];
    }
  }
  return g;
}

std::vector<std::array<int, 4>> barycentric_exponents(int dim, int k) {
  std::vector<std::array<int, 4>> out;
  for (int k0 = k; k0 >= 0; --k0) {
    for (int k1 = k - k0; k1 >= 0; --k1) {
      if (dim == 2) {
        out.push_back({k0, k1, k - k0 - k1, 0});
      } else {
        for (int k2 = k - k0 - k1; k2 >= 0; --k2)
          out.push_back({k0, k1, k2, k - k0 - k1 - k2});
      }
    }
  }
  return out;
}

double barycentric_moment(int dim, const std::array<int, 4>& kappa, double measure) {
  double num = factorial(dim) * measure;
  int total = 0;
  for (int i = 0; i <= dim; ++i) {
    num *= factorial(kappa[i]);
    total += kappa[i];
  }
  return num / factorial(total + dim);
}

std::vector<Point> interpolation_nodes(const Simplex& s, const OperatorSpec& spec) {
  spec.validate();
  std::vector<Point> out;
  for (const auto& l : node_lambdas(s.dim, spec)) out.push_back(combine(s, l));
  return out;
}

SimplexPolynomial::SimplexPolynomial(const Simplex& s, int k, std::vector<double> coeffs)
    : simplex(s), degree(k), coefficients(std::move(coeffs)) {
  const auto basis = barycentric_exponents(s.dim, k);
  if (coefficients.size() != basis.size())
    throw Error("coefficient count does not match the degree-" + std::to_string(k) + " basis");

  // Expand into Cartesian form once; lambda_i is affine with gradient g_i and
  // offset delta_{i0} - g_i . v_0.
  const auto g = barycentric_gradients(s);
  std::array<Polynomial, 4> lambda_poly;
  for (int i = 0; i <= s.dim; ++i) {
    Polynomial li(s.dim);
    double offset = (i == 0) ? 1.0 : 0.0;
    for (int c = 0; c < s.dim; ++c) offset -= g[i][c] * s.vertices[0].x[c];
    li.terms.push_back({offset, MultiIndex::zero(s.dim)});
    for (int c = 0; c < s.dim; ++c) li.terms.push_back({g[i][c], MultiIndex::unit(s.dim, c)});
    li.normalize();
    lambda_poly[i] = li;
  }

  cartesian_ = Polynomial(s.dim);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (coefficients[b] == 0.0) continue;
    Polynomial mono(s.dim);
    mono.terms.push_back({coefficients[b], MultiIndex::zero(s.dim)});
    for (int i = 0; i <= s.dim; ++i)
      for (int r = 0; r < basis[b][i]; ++r) mono = poly_product(mono, lambda_poly[i]);
    cartesian_ = poly_sum(cartesian_, mono);
  }
}

double SimplexPolynomial::value_barycentric(const std::array<double, 4>& lambda) const {
  const auto basis = barycentric_exponents(simplex.dim, degree);
  double sum = 0.0;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    double v = coefficients[b];
    for (int i = 0; i <= simplex.dim; ++i)
      for (int r = 0; r < basis[b][i]; ++r) v *= lambda[i];
    sum += v;
  }
  return sum;
}

double SimplexPolynomial::integrate() const {
  const auto basis = barycentric_exponents(simplex.dim, degree);
  const double m = measure(simplex);
  double sum = 0.0;
  for (std::size_t b = 0; b < basis.size(); ++b)
    sum += coefficients[b] * barycentric_moment(simplex.dim, basis[b], m);
  return sum;
}

double SimplexPolynomial::partial(const Point& p, const MultiIndex& beta) const {
  return cartesian_.partial(p, beta);
}

SimplexPolynomial interpolate(const ScalarField& field, const Simplex& s,
                              const OperatorSpec& spec) {
  spec.validate();
  const int d = s.dim;
  const auto basis = barycentric_exponents(d, spec.k);
  std::vector<double> coeffs(basis.size(), 0.0);

  if (spec.kind == ElementKind::Lagrange && spec.k == 1) {
    for (int i = 0; i <= d; ++i) {
      std::array<int, 4> kappa{};
      kappa[i] = 1;
      coeffs[exponent_index(basis, kappa)] = field.value(s.vertices[i]);
    }
  } else if (spec.kind == ElementKind::Lagrange && spec.k == 2) {
    // Vertex basis lambda_i (2 lambda_i - 1) = lambda_i^2 - sum_{j != i}
    // lambda_i lambda_j; edge basis 4 lambda_i lambda_j. Collecting monomial
    // coefficients: lambda_i^2 -> f(v_i); lambda_i lambda_j -> 4 f(m_ij) -
    // f(v_i) - f(v_j).
    std::array<double, 4> fv{};
    for (int i = 0; i <= d; ++i) fv[i] = field.value(s.vertices[i]);
    for (int i = 0; i <= d; ++i) {
      std::array<int, 4> kappa{};
      kappa[i] = 2;
      coeffs[exponent_index(basis, kappa)] = fv[i];
    }
    for (int i = 0; i <= d; ++i) {
      for (int j = i + 1; j <= d; ++j) {
        std::array<double, 4> l{};
        l[i] = 0.5;
        l[j] = 0.5;
        const double fm = field.value(combine(s, l));
        std::array<int, 4> kappa{};
        kappa[i] = 1;
        kappa[j] = 1;
        coeffs[exponent_index(basis, kappa)] = 4.0 * fm - fv[i] - fv[j];
      }
    }
  } else {
    // Crouzeix-Raviart: basis theta_i = sum_j lambda_j - d lambda_i is 1 at
    // the barycenter of the facet opposite vertex i and 0 at the others.
    std::array<double, 4> fb{};
    double fsum = 0.0;
    for (int i = 0; i <= d; ++i) {
      std::array<double, 4> l{};
      for (int n = 0; n <= d; ++n) l[n] = (n == i) ? 0.0 : 1.0 / d;
      fb[i] = field.value(combine(s, l));
      fsum += fb[i];
    }
    for (int j = 0; j <= d; ++j) {
      std::array<int, 4> kappa{};
      kappa[j] = 1;
      coeffs[exponent_index(basis, kappa)] = fsum - d * fb[j];
    }
  }

  SimplexPolynomial result(s, spec.k, std::move(coeffs));

  // Defensive residual check of the nodal conditions (exact barycentric
  // evaluation, so conditioning of the vertex matrix does not enter).
  double coef_scale = 0.0;
  for (double c : result.coefficients) coef_scale += std::abs(c);
  for (const auto& l : node_lambdas(d, spec)) {
    const double fv = field.value(combine(s, l));
    const double pv = result.value_barycentric(l);
    const double tol = 1e-9 * std::max({1.0, std::abs(fv), coef_scale});
    if (std::abs(pv - fv) > tol) throw Error("interpolation nodal residual check failed");
  }
  return result;
}

}  // namespace aniso
