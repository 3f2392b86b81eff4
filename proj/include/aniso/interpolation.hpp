#pragma once

#include <array>
#include <vector>

#include "aniso/errors.hpp"
#include "aniso/fields.hpp"
#include "aniso/geometry.hpp"

namespace aniso {

enum class ElementKind { Lagrange, CrouzeixRaviart };

struct OperatorSpec {
  ElementKind kind = ElementKind::Lagrange;
  int k = 1;

  void validate() const;  // Lagrange k in {1,2}; Crouzeix-Raviart k = 1
};

// Barycentric coordinates of p with respect to s; sum to 1, affine in p.
std::array<double, 4> barycentric(const Simplex& s, const Point& p);

// Gradients of the d+1 barycentric coordinate functions (constant in x).
std::array<std::array<double, 3>, 4> barycentric_gradients(const Simplex& s);

// Exponent tuples over lambda_0..lambda_d, homogeneous of degree k,
// lexicographic with lambda_0 major. Count = binomial(k+d, d).
std::vector<std::array<int, 4>> barycentric_exponents(int dim, int k);

// Exact integral of prod lambda_i^kappa_i over a simplex of the given
// measure: d! * |T| * prod(kappa_i!) / (|kappa| + d)!.
double barycentric_moment(int dim, const std::array<int, 4>& kappa, double measure);

// Lagrange: vertices (k=1) or vertices then lexicographic edge midpoints
// (k=2). Crouzeix-Raviart: facet barycenters in lexicographic facet order.
std::vector<Point> interpolation_nodes(const Simplex& s, const OperatorSpec& spec);

// Polynomial on a simplex, stored over the homogeneous barycentric monomial
// basis aligned with barycentric_exponents(dim, degree). Derivatives are
// exact: the basis is expanded once into Cartesian form on construction.
struct SimplexPolynomial final : public ScalarField {
  Simplex simplex;
  int degree = 1;
  std::vector<double> coefficients;

  SimplexPolynomial(const Simplex& s, int k, std::vector<double> coeffs);

  double value_barycentric(const std::array<double, 4>& lambda) const;
  double integrate() const;  // exact via barycentric moments

  double partial(const Point& p, const MultiIndex& beta) const override;
  int polynomial_degree() const override { return degree; }

  const Polynomial& cartesian() const { return cartesian_; }

 private:
  Polynomial cartesian_;
};

// Nodal interpolation onto P^k; coefficients come from the closed-form
// Lagrange / Crouzeix-Raviart bases (no linear solve). Result matches the
// field at every node; a defensive residual check guards the construction.
SimplexPolynomial interpolate(const ScalarField& field, const Simplex& s,
                              const OperatorSpec& spec);

}  // namespace aniso
