#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "aniso/fields.hpp"

namespace {

aniso::Polynomial random_polynomial(std::mt19937& rng, int dim, int degree) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  aniso::Polynomial p(dim);
  for (int order = 0; order <= degree; ++order)
    for (const aniso::MultiIndex& mi : aniso::multi_indices(dim, order))
      p.add_term(coef(rng), mi);
  p.normalize();
  return p;
}

// Central finite difference in one coordinate, for cross-checking partials.
double fd_partial(const aniso::ScalarField& f, const aniso::Point& p, int axis,
                  const aniso::MultiIndex& beta) {
  const double step = 1e-5;
  aniso::Point lo = p, hi = p;
  lo.x[axis] -= step;
  hi.x[axis] += step;
  return (f.partial(hi, beta) - f.partial(lo, beta)) / (2.0 * step);
}

}  // namespace

TEST_CASE("multi_indices enumerates lexicographically, first entry major") {
  std::vector<aniso::MultiIndex> list = aniso::multi_indices(2, 2);
  REQUIRE(list.size() == 3);
  CHECK(list[0].entries == std::array<int, 3>{2, 0, 0});
  CHECK(list[1].entries == std::array<int, 3>{1, 1, 0});
  CHECK(list[2].entries == std::array<int, 3>{0, 2, 0});

  std::vector<aniso::MultiIndex> cubes = aniso::multi_indices(3, 3);
  CHECK(cubes.size() == 10);  // C(3+2,2)
  CHECK(cubes.front().entries == std::array<int, 3>{3, 0, 0});
  CHECK(cubes.back().entries == std::array<int, 3>{0, 0, 3});
}

TEST_CASE("factorial covers the needed range") {
  CHECK(aniso::factorial(0) == doctest::Approx(1.0));
  CHECK(aniso::factorial(5) == doctest::Approx(120.0));
  CHECK(aniso::factorial(12) == doctest::Approx(479001600.0));
}

TEST_CASE("polynomial partial derivatives match hand values") {
  // f = 3 x^2 y - y^3 + 2.
  aniso::Polynomial f(2);
  f.add_term(3.0, aniso::MultiIndex{2, {2, 1, 0}});
  f.add_term(-1.0, aniso::MultiIndex{2, {0, 3, 0}});
  f.add_term(2.0, aniso::MultiIndex{2, {0, 0, 0}});
  f.normalize();

  aniso::Point p = aniso::Point::xy(1.5, -0.5);
  CHECK(f.value(p) == doctest::Approx(3.0 * 2.25 * -0.5 + 0.125 + 2.0));
  CHECK(f.partial(p, aniso::MultiIndex{2, {1, 0, 0}}) ==
        doctest::Approx(6.0 * 1.5 * -0.5));
  CHECK(f.partial(p, aniso::MultiIndex{2, {1, 1, 0}}) == doctest::Approx(6.0 * 1.5));
  CHECK(f.partial(p, aniso::MultiIndex{2, {0, 3, 0}}) == doctest::Approx(-6.0));
  CHECK(f.partial(p, aniso::MultiIndex{2, {0, 4, 0}}) == doctest::Approx(0.0));
  CHECK(f.polynomial_degree() == 3);
}

TEST_CASE("normalize merges duplicate powers and drops zeros") {
  aniso::Polynomial f(2);
  f.add_term(1.0, aniso::MultiIndex{2, {1, 0, 0}});
  f.add_term(2.0, aniso::MultiIndex{2, {1, 0, 0}});
  f.add_term(5.0, aniso::MultiIndex{2, {0, 1, 0}});
  f.add_term(-5.0, aniso::MultiIndex{2, {0, 1, 0}});
  f.normalize();
  REQUIRE(f.terms.size() == 1);
  CHECK(f.terms[0].coef == doctest::Approx(3.0));
}

TEST_CASE("poly_sum and poly_product expand correctly") {
  aniso::Polynomial x(2), y(2);
  x.add_term(1.0, aniso::MultiIndex{2, {1, 0, 0}});
  y.add_term(1.0, aniso::MultiIndex{2, {0, 1, 0}});

  aniso::Polynomial sum = aniso::poly_sum(x, y);
  aniso::Polynomial prod = aniso::poly_product(sum, sum);  // (x+y)^2
  aniso::Point p = aniso::Point::xy(0.3, 0.4);
  CHECK(prod.value(p) == doctest::Approx(0.49));
  CHECK(prod.polynomial_degree() == 2);

  aniso::Polynomial scaled = aniso::poly_scaled(prod, -2.0);
  CHECK(scaled.value(p) == doctest::Approx(-0.98));
}

TEST_CASE("gradient and hessian agree with finite differences") {
  std::mt19937 rng(7);
  for (int dim = 2; dim <= 3; ++dim) {
    aniso::Polynomial f = random_polynomial(rng, dim, 4);
    aniso::Point p;
    p.dim = dim;
    p.x = {0.3, -0.2, 0.5};
    if (dim == 2) p.x[2] = 0.0;

    std::array<double, 3> grad = f.gradient(p);
    for (int axis = 0; axis < dim; ++axis) {
      double fd = fd_partial(f, p, axis, aniso::MultiIndex::zero(dim));
      CHECK(grad[axis] == doctest::Approx(fd).epsilon(1e-6));
    }

    aniso::SmallMatrix hess = f.hessian(p);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        CHECK(hess.a[i][j] == doctest::Approx(hess.a[j][i]));
        double fd = fd_partial(f, p, i, aniso::MultiIndex::unit(dim, j));
        CHECK(hess.a[i][j] == doctest::Approx(fd).epsilon(1e-5));
      }
    }
  }
}

TEST_CASE("affine composition evaluates base at the mapped point") {
  std::mt19937 rng(11);
  aniso::Polynomial f = random_polynomial(rng, 2, 3);

  aniso::SmallMatrix linear;
  linear.dim = 2;
  linear.a[0][0] = 0.8; linear.a[0][1] = -0.4;
  linear.a[1][0] = 0.3; linear.a[1][1] = 1.2;
  aniso::Point shift = aniso::Point::xy(0.1, -0.7);
  aniso::AffineComposition g(f, linear, shift);

  aniso::Point p = aniso::Point::xy(0.4, 0.9);
  std::array<double, 3> mapped = mat_vec(linear, p.x);
  aniso::Point q = aniso::Point::xy(mapped[0] + shift.x[0], mapped[1] + shift.x[1]);
  CHECK(g.value(p) == doctest::Approx(f.value(q)));
  CHECK(g.polynomial_degree() == f.polynomial_degree());

  // Chain rule: grad g = linear^T grad f(q).
  std::array<double, 3> gf = f.gradient(q);
  std::array<double, 3> expected = mat_vec(transpose(linear), gf);
  std::array<double, 3> gg = g.gradient(p);
  for (int axis = 0; axis < 2; ++axis)
    CHECK(gg[axis] == doctest::Approx(expected[axis]).epsilon(1e-12));

  // Higher orders against finite differences of the composition itself.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      double fd = fd_partial(g, p, i, aniso::MultiIndex::unit(2, j));
      CHECK(g.partial(p, aniso::MultiIndex::unit(2, i).plus(
                             aniso::MultiIndex::unit(2, j))) ==
            doctest::Approx(fd).epsilon(1e-5));
    }
  }
}

TEST_CASE("directional derivative matches its finite-difference stencil") {
  std::mt19937 rng(13);
  for (int dim = 2; dim <= 3; ++dim) {
    aniso::Polynomial f = random_polynomial(rng, dim, 4);
    std::array<double, 3> v{0.6, -0.8, 0.0};
    if (dim == 3) v = {0.48, -0.64, 0.6};
    aniso::DirectionalDerivative df(f, {v});

    aniso::Point p;
    p.dim = dim;
    p.x = {0.25, 0.4, -0.3};
    if (dim == 2) p.x[2] = 0.0;

    const double step = 1e-5;
    aniso::Point hi = p, lo = p;
    for (int c = 0; c < dim; ++c) {
      hi.x[c] += step * v[c];
      lo.x[c] -= step * v[c];
    }
    double fd = (f.value(hi) - f.value(lo)) / (2.0 * step);
    CHECK(df.value(p) == doctest::Approx(fd).epsilon(1e-6));

    // Two iterated directions, checked against explicit expansion.
    std::array<double, 3> w{0.0, 1.0, 0.0};
    aniso::DirectionalDerivative d2(f, {v, w});
    double expanded = 0.0;
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        aniso::MultiIndex beta =
            aniso::MultiIndex::unit(dim, i).plus(aniso::MultiIndex::unit(dim, j));
        expanded += v[i] * w[j] * f.partial(p, beta);
      }
    }
    CHECK(d2.value(p) == doctest::Approx(expanded).epsilon(1e-12));
    CHECK(d2.polynomial_degree() == std::max(0, f.polynomial_degree() - 2));
  }
}

TEST_CASE("partial shift and difference wrappers compose derivatives") {
  aniso::Polynomial f(2);
  f.add_term(1.0, aniso::MultiIndex{2, {3, 1, 0}});  // x^3 y

  aniso::PartialShift fx(f, aniso::MultiIndex{2, {1, 0, 0}});
  aniso::Point p = aniso::Point::xy(0.5, 2.0);
  CHECK(fx.value(p) == doctest::Approx(3.0 * 0.25 * 2.0));
  CHECK(fx.partial(p, aniso::MultiIndex{2, {0, 1, 0}}) == doctest::Approx(0.75));

  aniso::Polynomial g(2);
  g.add_term(4.0, aniso::MultiIndex{2, {3, 1, 0}});
  aniso::Difference diff(g, f);
  CHECK(diff.value(p) == doctest::Approx(3.0 * 0.125 * 2.0));
  CHECK(diff.partial(p, aniso::MultiIndex{2, {1, 1, 0}}) ==
        doctest::Approx(3.0 * 3.0 * 0.25));
}
