#pragma once

#include <array>
#include <functional>
#include <vector>

#include "aniso/errors.hpp"
#include "aniso/geometry.hpp"

namespace aniso {

// Conical-product rule on the reference simplex; nodes stored in barycentric
// coordinates, weights in reference-measure units (sum 1/d!). Rules are
// immutable and shareable.
struct QuadratureRule {
  int dim = 2;
  int exactness_degree = 1;
  std::vector<std::array<double, 4>> nodes;
  std::vector<double> weights;
};

// Collapsed tensor Gauss-Jacobi rule exact to the requested total degree,
// 1 <= degree <= 20.
QuadratureRule make_rule(int dim, int exactness_degree);

// integral over s of f: d! * |T| * sum w_k f(x_k).
double integrate(const QuadratureRule& rule, const Simplex& s,
                 const std::function<double(const Point&)>& f);

namespace detail {

// n-point rule for integral_0^1 (1-u)^alpha f(u) du (Gauss-Jacobi with the
// second exponent zero), via the Golub-Welsch eigenvalue method.
void gauss_jacobi_01(int n, int alpha, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace detail

}  // namespace aniso
