#include "aniso/norms.hpp"

#include <algorithm>
#include <cmath>

namespace aniso {

namespace {

void check_smoothness(const ScalarField& f, int order) {
  if (f.smoothness() >= 0 && order > f.smoothness())
    throw InsufficientSmoothness("field lacks derivatives of order " + std::to_string(order));
}

int auto_degree(const ScalarField& f, int requested) {
  if (requested > 0) return std::min(requested, 20);
  const int pd = f.polynomial_degree();
  if (pd >= 0) return std::clamp(2 * pd, 1, 20);
  return kDefaultQuadratureDegree;
}

}  // namespace

double inv_exponent(int e) {
  if (e == kExpInf) return 0.0;
  if (e == 1 || e == 2) return 1.0 / e;
  throw Error("exponent must be 1, 2, or infinity");
}

void NormSpec::validate() const {
  inv_exponent(p);
  inv_exponent(q);
  if (m < 0 || ell < m) throw Error("norm orders must satisfy 0 <= m <= ell");
}

double sobolev_seminorm(const Simplex& s, const ScalarField& f, int m, int q,
                        int quadrature_degree) {
  inv_exponent(q);
  if (m < 0) throw Error("derivative order must be non-negative");
  check_smoothness(f, m);
  const auto betas = multi_indices(s.dim, m);

  if (q == kExpInf) {
    const QuadratureRule rule = make_rule(s.dim, kDefaultQuadratureDegree);
    double best = 0.0;
    auto consider = [&](const Point& p) {
      for (const auto& beta : betas) best = std::max(best, std::abs(f.partial(p, beta)));
    };
    for (const auto& lambda : rule.nodes) {
      Point p{s.dim, {0.0, 0.0, 0.0}};
      for (int n = 0; n <= s.dim; ++n)
        for (int c = 0; c < s.dim; ++c) p.x[c] += lambda[n] * s.vertices[n].x[c];
      consider(p);
    }
    for (int n = 0; n <= s.dim; ++n) consider(s.vertices[n]);
    return best;
  }

  const QuadratureRule rule = make_rule(s.dim, auto_degree(f, quadrature_degree));
  const double total = integrate(rule, s, [&](const Point& p) {
    double acc = 0.0;
    for (const auto& beta : betas) {
      const double v = f.partial(p, beta);
      acc += (q == 1) ? std::abs(v) : v * v;
    }
    return acc;
  });
  return (q == 1) ? total : std::sqrt(total);
}

double anisotropic_rhs(const Simplex& s, const ScalarField& field, const NormSpec& spec,
                       RhsMode mode) {
  spec.validate();
  check_smoothness(field, spec.ell);

  const double mT = measure(s);
  const auto [h, edges] = diameter_and_edges(s);
  const double H = param_H_T0(s);
  const StandardPosition sp = standard_position(s);

  const double prefactor =
      std::pow(mT, inv_exponent(spec.q) - inv_exponent(spec.p)) * std::pow(H / h, spec.m);

  const auto gammas = multi_indices(s.dim, spec.ell - spec.m);
  double sum = 0.0;

  if (mode == RhsMode::HScaled) {
    // Pull the field back along the rigid part of the placement and measure
    // on the simplex in standard position.
    const AffineComposition pulled(field, sp.rotation, sp.translation);
    const auto sv = sp.standard_vertices();
    Simplex t_std;
    t_std.dim = s.dim;
    for (int n = 0; n <= s.dim; ++n) t_std.vertices[n] = sv[n];
    const auto hs = sp.mathscr_h();
    for (const auto& gamma : gammas) {
      double weight = 1.0;
      for (int i = 0; i < s.dim; ++i)
        for (int r = 0; r < gamma.entries[i]; ++r) weight *= hs[i];
      const PartialShift dgamma(pulled, gamma);
      sum += weight * sobolev_seminorm(t_std, dgamma, spec.m, spec.p);
    }
    return prefactor * sum;
  }

  // Directional form measured on the original simplex; directions are the
  // r-vectors rotated back into the original frame.
  const auto rvecs = sp.r_vectors();
  std::array<std::array<double, 3>, 3> dirs{};
  for (int i = 0; i < s.dim; ++i) dirs[i] = mat_vec(sp.rotation, rvecs[i]);
  for (const auto& gamma : gammas) {
    double weight = 1.0;
    std::vector<std::array<double, 3>> applied;
    for (int i = 0; i < s.dim; ++i) {
      for (int r = 0; r < gamma.entries[i]; ++r) {
        weight *= sp.alpha[i];
        applied.push_back(dirs[i]);
      }
    }
    const DirectionalDerivative dgamma(field, std::move(applied));
    sum += weight * sobolev_seminorm(s, dgamma, spec.m, spec.p);
  }
  return prefactor * sum;
}

double classical_rhs(const Simplex& s, const ScalarField& field, const NormSpec& spec) {
  spec.validate();
  check_smoothness(field, spec.ell + 1);

  const double mT = measure(s);
  const auto [h, edges] = diameter_and_edges(s);
  const double H = param_H_T0(s);
  const StandardPosition sp = standard_position(s);
  const double ratio = sp.alpha[0] / sp.alpha[1];  // alpha ordering puts min at [1]

  return std::pow(mT, inv_exponent(spec.q) - inv_exponent(spec.p)) * std::pow(ratio, spec.m) *
         std::pow(H / h, spec.m) * std::pow(h, spec.ell + 1 - spec.m) *
         sobolev_seminorm(s, field, spec.ell + 1, spec.p);
}

}  // namespace aniso
