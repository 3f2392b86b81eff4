#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "aniso/errors.hpp"
#include "aniso/interpolation.hpp"

namespace {

aniso::Simplex unit_triangle() {
  return aniso::Simplex::triangle(aniso::Point::xy(0, 0), aniso::Point::xy(1, 0),
                                  aniso::Point::xy(0, 1));
}

aniso::Simplex unit_tetrahedron() {
  return aniso::Simplex::tetrahedron(
      aniso::Point::xyz(0, 0, 0), aniso::Point::xyz(1, 0, 0),
      aniso::Point::xyz(0, 1, 0), aniso::Point::xyz(0, 0, 1));
}

aniso::Simplex random_simplex(std::mt19937& rng, int dim) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (;;) {
    aniso::Simplex s;
    s.dim = dim;
    for (int n = 0; n <= dim; ++n) {
      s.vertices[n].dim = dim;
      for (int c = 0; c < dim; ++c) s.vertices[n].x[c] = coord(rng);
    }
    try {
      if (aniso::measure(s) > 1e-2) return s;
    } catch (const aniso::Degenerate&) {
    }
  }
}

aniso::Polynomial random_polynomial(std::mt19937& rng, int dim, int degree) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  aniso::Polynomial p(dim);
  for (int order = 0; order <= degree; ++order)
    for (const aniso::MultiIndex& mi : aniso::multi_indices(dim, order))
      p.add_term(coef(rng), mi);
  p.normalize();
  return p;
}

aniso::Point random_interior_point(std::mt19937& rng, const aniso::Simplex& s) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::array<double, 4> w{};
  double total = 0.0;
  for (int n = 0; n <= s.dim; ++n) {
    w[n] = -std::log(u(rng) + 1e-12);
    total += w[n];
  }
  aniso::Point p;
  p.dim = s.dim;
  for (int n = 0; n <= s.dim; ++n)
    for (int c = 0; c < s.dim; ++c) p.x[c] += w[n] / total * s.vertices[n].x[c];
  return p;
}

}  // namespace

TEST_CASE("barycentric coordinates hit the expected landmarks") {
  aniso::Simplex tri = unit_triangle();
  std::array<double, 4> at_vertex = aniso::barycentric(tri, aniso::Point::xy(1, 0));
  CHECK(at_vertex[0] == doctest::Approx(0.0));
  CHECK(at_vertex[1] == doctest::Approx(1.0));
  CHECK(at_vertex[2] == doctest::Approx(0.0));

  std::array<double, 4> inner =
      aniso::barycentric(tri, aniso::Point::xy(0.25, 0.25));
  CHECK(inner[0] == doctest::Approx(0.5));
  CHECK(inner[1] == doctest::Approx(0.25));
  CHECK(inner[2] == doctest::Approx(0.25));

  aniso::Simplex tet = unit_tetrahedron();
  std::array<double, 4> centroid =
      aniso::barycentric(tet, aniso::Point::xyz(0.25, 0.25, 0.25));
  for (int n = 0; n < 4; ++n) CHECK(centroid[n] == doctest::Approx(0.25));
}

TEST_CASE("barycentric coordinates are affine and partition unity") {
  std::mt19937 rng(29);
  for (int dim = 2; dim <= 3; ++dim) {
    aniso::Simplex s = random_simplex(rng, dim);
    aniso::Point p = random_interior_point(rng, s);
    aniso::Point q = random_interior_point(rng, s);
    std::array<double, 4> lp = aniso::barycentric(s, p);
    std::array<double, 4> lq = aniso::barycentric(s, q);

    aniso::Point mid;
    mid.dim = dim;
    for (int c = 0; c < dim; ++c) mid.x[c] = 0.5 * (p.x[c] + q.x[c]);
    std::array<double, 4> lm = aniso::barycentric(s, mid);

    double sum = 0.0;
    for (int n = 0; n <= dim; ++n) {
      CHECK(lm[n] == doctest::Approx(0.5 * (lp[n] + lq[n])).epsilon(1e-12));
      sum += lp[n];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("barycentric gradients are the dual basis of the edge vectors") {
  std::mt19937 rng(31);
  for (int dim = 2; dim <= 3; ++dim) {
    aniso::Simplex s = random_simplex(rng, dim);
    auto grads = aniso::barycentric_gradients(s);
    for (int n = 0; n <= dim; ++n) {
      for (int m = 0; m <= dim; ++m) {
        // grad(lambda_n) . (v_m - v_0) = delta_{nm} - delta_{n0}.
        double dot = 0.0;
        for (int c = 0; c < dim; ++c)
          dot += grads[n][c] * (s.vertices[m].x[c] - s.vertices[0].x[c]);
        double expected = (n == m ? 1.0 : 0.0) - (n == 0 ? 1.0 : 0.0);
        CHECK(dot == doctest::Approx(expected).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("barycentric exponent tables have the documented order") {
  std::vector<std::array<int, 4>> p1 = aniso::barycentric_exponents(2, 1);
  REQUIRE(p1.size() == 3);
  CHECK(p1[0] == std::array<int, 4>{1, 0, 0, 0});
  CHECK(p1[2] == std::array<int, 4>{0, 0, 1, 0});

  std::vector<std::array<int, 4>> p2 = aniso::barycentric_exponents(2, 2);
  REQUIRE(p2.size() == 6);
  CHECK(p2[0] == std::array<int, 4>{2, 0, 0, 0});
  CHECK(p2[1] == std::array<int, 4>{1, 1, 0, 0});
  CHECK(p2[5] == std::array<int, 4>{0, 0, 2, 0});

  CHECK(aniso::barycentric_exponents(3, 2).size() == 10);
}

TEST_CASE("barycentric moments integrate monomials exactly") {
  // Over the unit triangle: int lambda_1 = |T|/3 * ... = 2*|T|*1/3! = 1/6.
  CHECK(aniso::barycentric_moment(2, {0, 1, 0, 0}, 0.5) == doctest::Approx(1.0 / 6.0));
  CHECK(aniso::barycentric_moment(2, {1, 1, 0, 0}, 0.5) == doctest::Approx(1.0 / 24.0));
  CHECK(aniso::barycentric_moment(3, {0, 2, 0, 0}, 1.0 / 6.0) ==
        doctest::Approx(1.0 / 60.0));  // x^2 over the unit tetrahedron
}

TEST_CASE("interpolation nodes follow the documented layout") {
  aniso::Simplex tri = unit_triangle();
  std::vector<aniso::Point> p1 =
      aniso::interpolation_nodes(tri, {aniso::ElementKind::Lagrange, 1});
  REQUIRE(p1.size() == 3);
  CHECK(p1[1].x[0] == doctest::Approx(1.0));

  std::vector<aniso::Point> p2 =
      aniso::interpolation_nodes(tri, {aniso::ElementKind::Lagrange, 2});
  REQUIRE(p2.size() == 6);
  // Vertices first, then midpoints of (0,1), (0,2), (1,2).
  CHECK(p2[3].x[0] == doctest::Approx(0.5));
  CHECK(p2[3].x[1] == doctest::Approx(0.0));
  CHECK(p2[4].x[0] == doctest::Approx(0.0));
  CHECK(p2[4].x[1] == doctest::Approx(0.5));
  CHECK(p2[5].x[0] == doctest::Approx(0.5));
  CHECK(p2[5].x[1] == doctest::Approx(0.5));

  std::vector<aniso::Point> cr =
      aniso::interpolation_nodes(tri, {aniso::ElementKind::CrouzeixRaviart, 1});
  REQUIRE(cr.size() == 3);
  CHECK(cr[0].x[0] == doctest::Approx(0.5));
  CHECK(cr[0].x[1] == doctest::Approx(0.0));
  CHECK(cr[1].x[0] == doctest::Approx(0.0));
  CHECK(cr[1].x[1] == doctest::Approx(0.5));
  CHECK(cr[2].x[0] == doctest::Approx(0.5));
  CHECK(cr[2].x[1] == doctest::Approx(0.5));

  std::vector<aniso::Point> tet2 = aniso::interpolation_nodes(
      unit_tetrahedron(), {aniso::ElementKind::Lagrange, 2});
  CHECK(tet2.size() == 10);
  std::vector<aniso::Point> tetcr = aniso::interpolation_nodes(
      unit_tetrahedron(), {aniso::ElementKind::CrouzeixRaviart, 1});
  CHECK(tetcr.size() == 4);
}

TEST_CASE("operator spec validation rejects unsupported degrees") {
  CHECK_THROWS_AS((aniso::OperatorSpec{aniso::ElementKind::Lagrange, 3}.validate()),
                  aniso::UnsupportedDegree);
  CHECK_THROWS_AS((aniso::OperatorSpec{aniso::ElementKind::Lagrange, 0}.validate()),
                  aniso::UnsupportedDegree);
  CHECK_THROWS_AS(
      (aniso::OperatorSpec{aniso::ElementKind::CrouzeixRaviart, 2}.validate()),
      aniso::UnsupportedDegree);
}

TEST_CASE("simplex polynomial validates coefficient counts") {
  aniso::Simplex tri = unit_triangle();
  CHECK_THROWS_AS(aniso::SimplexPolynomial(tri, 1, {1.0, 2.0}), aniso::Error);
  CHECK_NOTHROW(aniso::SimplexPolynomial(tri, 1, {1.0, 2.0, 3.0}));
}

TEST_CASE("simplex polynomial integrates exactly") {
  std::mt19937 rng(37);
  aniso::Simplex tri = unit_triangle();
  // lambda_1^2 corresponds to x^2: integral 1/12 over the unit triangle.
  aniso::SimplexPolynomial p(tri, 2, {0, 0, 0, 1, 0, 0});
  CHECK(p.integrate() == doctest::Approx(1.0 / 12.0));

  // Cross-check against the Cartesian expansion on a random simplex.
  aniso::Simplex s = random_simplex(rng, 3);
  std::vector<double> coeffs(10);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (double& c : coeffs) c = coef(rng);
  aniso::SimplexPolynomial q(s, 2, coeffs);
  aniso::Point probe = random_interior_point(rng, s);
  CHECK(q.value(probe) == doctest::Approx(q.cartesian().value(probe)));
}

TEST_CASE("interpolating x^2 on the unit triangle gives the secant plane") {
  aniso::Simplex tri = unit_triangle();
  aniso::Polynomial f(2);
  f.add_term(1.0, aniso::MultiIndex{2, {2, 0, 0}});

  aniso::SimplexPolynomial lag =
      aniso::interpolate(f, tri, {aniso::ElementKind::Lagrange, 1});
  // Nodal values 0, 1, 0 make the interpolant x.
  aniso::Point p = aniso::Point::xy(0.3, 0.2);
  CHECK(lag.value(p) == doctest::Approx(0.3));
  CHECK(lag.partial(p, aniso::MultiIndex{2, {1, 0, 0}}) == doctest::Approx(1.0));
  CHECK(lag.partial(p, aniso::MultiIndex{2, {0, 1, 0}}) == doctest::Approx(0.0));
}

TEST_CASE("known anisotropic tetrahedron interpolant has the derived coefficients") {
  double s = 1.0 / 64.0;
  double eps = 3.0;
  aniso::Simplex tet = aniso::Simplex::tetrahedron(
      aniso::Point::xyz(0, 0, 0), aniso::Point::xyz(s, 0, 0),
      aniso::Point::xyz(s / 2.0, std::pow(s, eps), 0),
      aniso::Point::xyz(0, 0, s));
  aniso::Polynomial f(3);  // x^2 + y^2/4 + z^2
  f.add_term(1.0, aniso::MultiIndex{3, {2, 0, 0}});
  f.add_term(0.25, aniso::MultiIndex{3, {0, 2, 0}});
  f.add_term(1.0, aniso::MultiIndex{3, {0, 0, 2}});

  aniso::SimplexPolynomial interp =
      aniso::interpolate(f, tet, {aniso::ElementKind::Lagrange, 1});
  const aniso::Polynomial& cart = interp.cartesian();

  double a = 0.0, b = 0.0, c = 0.0, constant = 0.0;
  for (const aniso::Polynomial::Term& t : cart.terms) {
    if (t.power.entries == std::array<int, 3>{1, 0, 0}) a = t.coef;
    if (t.power.entries == std::array<int, 3>{0, 1, 0}) b = t.coef;
    if (t.power.entries == std::array<int, 3>{0, 0, 1}) c = t.coef;
    if (t.power.order() == 0) constant = t.coef;
  }
  CHECK(a == doctest::Approx(s).epsilon(1e-12));
  CHECK(b == doctest::Approx((std::pow(s, eps) - std::pow(s, 2.0 - eps)) / 4.0)
               .epsilon(1e-12));
  CHECK(c == doctest::Approx(s).epsilon(1e-12));
  CHECK(constant == doctest::Approx(0.0));
}

TEST_CASE("both operators reproduce their polynomial space") {
  std::mt19937 rng(41);
  struct Combo {
    aniso::ElementKind kind;
    int k;
  };
  const Combo combos[] = {{aniso::ElementKind::Lagrange, 1},
                          {aniso::ElementKind::Lagrange, 2},
                          {aniso::ElementKind::CrouzeixRaviart, 1}};
  for (int dim = 2; dim <= 3; ++dim) {
    for (const Combo& combo : combos) {
      for (int trial = 0; trial < 25; ++trial) {
        aniso::Simplex s = random_simplex(rng, dim);
        aniso::Polynomial p = random_polynomial(rng, dim, combo.k);
        aniso::SimplexPolynomial ip =
            aniso::interpolate(p, s, {combo.kind, combo.k});
        for (int probe = 0; probe < 20; ++probe) {
          aniso::Point x = random_interior_point(rng, s);
          double expected = p.value(x);
          double scale = std::max(1.0, std::abs(expected));
          CHECK(std::abs(ip.value(x) - expected) / scale < 1e-11);
        }
      }
    }
  }
}

TEST_CASE("interpolation commutes with affine pullback") {
  std::mt19937 rng(43);
  for (int dim = 2; dim <= 3; ++dim) {
    aniso::Simplex ref = dim == 2 ? unit_triangle() : unit_tetrahedron();
    for (int trial = 0; trial < 20; ++trial) {
      aniso::Simplex s = random_simplex(rng, dim);
      aniso::Polynomial f = random_polynomial(rng, dim, 3);

      // Affine map Phi: ref -> s aligned with matching vertex order.
      aniso::SmallMatrix linear;
      linear.dim = dim;
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          linear.a[i][j] = s.vertices[j + 1].x[i] - s.vertices[0].x[i];
      aniso::Point shift = s.vertices[0];
      aniso::AffineComposition pulled(f, linear, shift);

      aniso::OperatorSpec spec{aniso::ElementKind::Lagrange, 2};
      aniso::SimplexPolynomial on_s = aniso::interpolate(f, s, spec);
      aniso::SimplexPolynomial on_ref = aniso::interpolate(pulled, ref, spec);

      for (int probe = 0; probe < 10; ++probe) {
        aniso::Point xr = random_interior_point(rng, ref);
        std::array<double, 3> mapped = mat_vec(linear, xr.x);
        aniso::Point xs;
        xs.dim = dim;
        for (int c = 0; c < dim; ++c) xs.x[c] = mapped[c] + shift.x[c];
        double lhs = on_s.value(xs);
        double rhs = on_ref.value(xr);
        CHECK(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)) < 1e-11);
      }
    }
  }
}

TEST_CASE("nonconforming interpolant is affine and exact at facet means") {
  std::mt19937 rng(47);
  for (int dim = 2; dim <= 3; ++dim) {
    aniso::Simplex s = random_simplex(rng, dim);
    aniso::Polynomial f = random_polynomial(rng, dim, 4);
    aniso::OperatorSpec spec{aniso::ElementKind::CrouzeixRaviart, 1};
    aniso::SimplexPolynomial ip = aniso::interpolate(f, s, spec);
    CHECK(ip.cartesian().polynomial_degree() <= 1);

    // For affine functions, the value at a facet barycenter equals the facet
    // mean, so nodal matching pins all facet means of the interpolant.
    for (const aniso::Point& node : aniso::interpolation_nodes(s, spec)) {
      CHECK(ip.value(node) ==
            doctest::Approx(f.value(node)).epsilon(1e-11));
    }
  }
}
