#include "aniso/studies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aniso/quadrature.hpp"
#include "aniso/smallmat.hpp"

namespace aniso {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw InvalidFamilyParams(what);
}

}  // namespace

Simplex family_generate(const FamilySpec& spec) {
  const double s = spec.scale();
  require(s > 0.0 && s < 1.0, "scale must lie in (0, 1)");
  switch (spec.family_id) {
    case FamilyId::RightAngled2D:
      require(spec.eps >= 1.0, "right-angled family needs eps >= 1");
      return Simplex::triangle(Point::xy(0, 0), Point::xy(s, 0),
                               Point::xy(0, std::pow(s, spec.eps)));
    case FamilyId::Dagger2D:
      require(spec.eps > 1.0 && spec.delta > 1.0, "dagger family needs eps, delta > 1");
      return Simplex::triangle(Point::xy(0, 0), Point::xy(s, 0),
                               Point::xy(std::pow(s, spec.delta), std::pow(s, spec.eps)));
    case FamilyId::Blade2D:
      require(spec.eps > 1.0, "blade family needs eps > 1");
      return Simplex::triangle(Point::xy(0, 0), Point::xy(2 * s, 0),
                               Point::xy(s, std::pow(s, spec.eps)));
    case FamilyId::Tetra7_1_3: {
      require(spec.eps >= 1.0 && spec.delta >= 1.0 && spec.gamma >= 1.0,
              "tetra family needs eps, delta, gamma >= 1");
      const double disc = 4 * s * s - std::pow(s, 2 * spec.gamma);
      require(disc >= 0.0, "tetra family needs s^(2 gamma) <= 4 s^2");
      return Simplex::tetrahedron(
          Point::xyz(0, 0, 0), Point::xyz(2 * s, 0, 0),
          Point::xyz(2 * s - std::sqrt(disc), std::pow(s, spec.gamma), 0),
          Point::xyz(std::pow(s, spec.delta), 0, std::pow(s, spec.eps)));
    }
    case FamilyId::Sliver:
      require(spec.eps1 >= 1.0 && spec.eps2 >= 1.0, "sliver family needs eps1, eps2 >= 1");
      return Simplex::tetrahedron(Point::xyz(std::pow(s, spec.eps2), 0, 0),
                                  Point::xyz(-std::pow(s, spec.eps2), 0, 0),
                                  Point::xyz(0, -s, std::pow(s, spec.eps1)),
                                  Point::xyz(0, s, std::pow(s, spec.eps1)));
    case FamilyId::ConvI:
      require(spec.eps >= 1.0 && spec.delta >= 1.0, "family (I) needs eps, delta >= 1");
      return Simplex::tetrahedron(Point::xyz(0, 0, 0), Point::xyz(s, 0, 0),
                                  Point::xyz(0, std::pow(s, spec.eps), 0),
                                  Point::xyz(0, 0, std::pow(s, spec.delta)));
    case FamilyId::ConvII:
      require(spec.eps >= 1.0, "family (II) needs eps >= 1");
      return Simplex::tetrahedron(Point::xyz(0, 0, 0), Point::xyz(s, 0, 0),
                                  Point::xyz(s / 2, std::pow(s, spec.eps), 0),
                                  Point::xyz(0, 0, s));
  }
  throw InvalidFamilyParams("unknown family");
}

std::vector<StudyRow> sliver_table(double eps1, double eps2, const std::vector<int>& n_list) {
  require(!n_list.empty(), "level list must be nonempty");
  std::vector<StudyRow> rows;
  for (int n : n_list) {
    FamilySpec fs;
    fs.family_id = FamilyId::Sliver;
    fs.eps1 = eps1;
    fs.eps2 = eps2;
    fs.N = n;
    const Simplex t = family_generate(fs);
    const GeometricReport rep = full_report(t);
    StudyRow row;
    row.N = n;
    row.s = fs.scale();
    row.quantities["L6_over_L1"] = rep.edges_sorted.back().length / rep.edges_sorted[0].length;
    row.quantities["h3_over_measure"] = rep.h * rep.h * rep.h / rep.measure;
    row.quantities["H_over_h"] = rep.H_over_h;
    row.quantities["R3_over_h"] = rep.circumradius / rep.h;
    rows.push_back(std::move(row));
  }
  return rows;
}

Polynomial default_bound_field(int dim) {
  Polynomial f(dim);
  f.terms.push_back({1.0, MultiIndex{dim, {2, 0, 0}}});
  if (dim == 2) {
    f.terms.push_back({1.0, MultiIndex{dim, {0, 2, 0}}});
  } else {
    f.terms.push_back({0.25, MultiIndex{dim, {0, 2, 0}}});
    f.terms.push_back({1.0, MultiIndex{dim, {0, 0, 2}}});
  }
  f.normalize();
  return f;
}

std::vector<StudyRow> run_convergence(FamilyId family, double eps, double delta,
                                      const std::vector<int>& n_list, const OperatorSpec& op,
                                      const NormSpec& norm) {
  require(family == FamilyId::ConvI || family == FamilyId::ConvII,
          "convergence study covers families (I) and (II)");
  require(!n_list.empty(), "level list must be nonempty");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    require(n_list[i] == 2 * n_list[i - 1], "levels must double");
  op.validate();
  norm.validate();

  const Polynomial f0 = default_bound_field(3);
  std::vector<StudyRow> rows;
  double prev_err = 0.0;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    FamilySpec fs;
    fs.family_id = family;
    fs.eps = eps;
    fs.delta = delta;
    fs.N = n_list[i];
    const Simplex t = family_generate(fs);
    const SimplexPolynomial interp = interpolate(f0, t, op);
    const Difference err_field(f0, interp);
    const double err = sobolev_seminorm(t, err_field, norm.m, norm.q);
    StudyRow row;
    row.N = n_list[i];
    row.s = fs.scale();
    row.quantities["Err"] = err;
    if (i > 0) row.quantities["r"] = std::log2(prev_err / err);
    prev_err = err;
    rows.push_back(std::move(row));
  }
  return rows;
}

BoundReport measure_bound_constant(const FamilySpec& family, const ScalarField& field,
                                   BoundKind bound, const NormSpec& norm,
                                   const std::vector<double>& s_levels) {
  require(!s_levels.empty(), "level list must be nonempty");
  norm.validate();
  OperatorSpec op;
  op.kind = ElementKind::Lagrange;
  op.k = std::max(1, norm.ell - 1);
  op.validate();

  BoundReport report;
  report.family = family;
  for (double s : s_levels) {
    FamilySpec fs = family;
    fs.N = 0;
    fs.s = s;
    const Simplex t = family_generate(fs);
    const SimplexPolynomial interp = interpolate(field, t, op);
    const Difference err_field(field, interp);
    const double lhs = sobolev_seminorm(t, err_field, norm.m, norm.q);
    double rhs = 0.0;
    switch (bound) {
      case BoundKind::TheoremA:
        rhs = classical_rhs(t, field, norm);
        break;
      case BoundKind::TheoremB_H:
        rhs = anisotropic_rhs(t, field, norm, RhsMode::HScaled);
        break;
      case BoundKind::TheoremB_dir:
        rhs = anisotropic_rhs(t, field, norm, RhsMode::Directional);
        break;
    }
    double ratio;
    if (rhs > 0.0) {
      ratio = lhs / rhs;
      report.ratio_max = std::max(report.ratio_max, ratio);
    } else if (lhs > 0.0) {
      ratio = std::numeric_limits<double>::infinity();
      report.zero_rhs = true;
    } else {
      ratio = 0.0;
    }
    report.levels.push_back(s);
    report.lhs.push_back(lhs);
    report.rhs.push_back(rhs);
    report.ratio.push_back(ratio);
  }
  return report;
}

double inverse_constant(const Simplex& s, int k, int axis_i, int p, int q) {
  if (k != 1 && k != 2) throw UnsupportedDegree("inverse constant covers k = 1 and 2");
  if (p != 2 || q != 2) throw Error("inverse constant implemented for p = q = 2 only");
  if (axis_i < 1 || axis_i > s.dim) throw InvalidDimension("axis index out of range");

  const StandardPosition sp = standard_position(s);
  const auto sv = sp.standard_vertices();
  Simplex t;
  t.dim = s.dim;
  for (int n = 0; n <= s.dim; ++n) t.vertices[n] = sv[n];

  const auto basis = barycentric_exponents(t.dim, k);
  const int n = static_cast<int>(basis.size());
  const auto grads = barycentric_gradients(t);
  const QuadratureRule rule = make_rule(t.dim, 2 * k);
  const double jac = (t.dim == 2 ? 2.0 : 6.0) * measure(t);

  // phi_b(lambda) = prod lambda^kappa; directional derivative along axis via
  // the barycentric gradients.
  auto eval = [&](int b, const std::array<double, 4>& lambda) {
    double v = 1.0;
    for (int i = 0; i <= t.dim; ++i)
      for (int r = 0; r < basis[b][i]; ++r) v *= lambda[i];
    return v;
  };
  auto eval_dx = [&](int b, const std::array<double, 4>& lambda) {
    double sum = 0.0;
    for (int i = 0; i <= t.dim; ++i) {
      if (basis[b][i] == 0) continue;
      double v = basis[b][i] * grads[i][axis_i - 1];
      for (int j = 0; j <= t.dim; ++j) {
        const int e = basis[b][j] - (j == i ? 1 : 0);
        for (int r = 0; r < e; ++r) v *= lambda[j];
      }
      sum += v;
    }
    return sum;
  };

  std::array<double, kMaxGramDim * kMaxGramDim> mass{}, stiff{};
  for (std::size_t node = 0; node < rule.nodes.size(); ++node) {
    const double w = jac * rule.weights[node];
    std::array<double, kMaxGramDim> val{}, der{};
    for (int b = 0; b < n; ++b) {
      val[b] = eval(b, rule.nodes[node]);
      der[b] = eval_dx(b, rule.nodes[node]);
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        mass[a * n + b] += w * val[a] * val[b];
        stiff[a * n + b] += w * der[a] * der[b];
      }
    }
  }

  const double lambda_max = sym_generalized_eig_max(n, stiff.data(), mass.data());
  return sp.mathscr_h()[axis_i - 1] * std::sqrt(std::max(0.0, lambda_max));
}

}  // namespace aniso
