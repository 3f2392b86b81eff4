#pragma once

#include <array>
#include <vector>

#include "aniso/errors.hpp"
#include "aniso/geometry.hpp"
#include "aniso/smallmat.hpp"

namespace aniso {

// Multi-index over d coordinates; entries beyond dim stay zero.
struct MultiIndex {
  int dim = 2;
  std::array<int, 3> entries{};

  int order() const { return entries[0] + entries[1] + entries[2]; }
  static MultiIndex zero(int dim) { return MultiIndex{dim, {0, 0, 0}}; }
  static MultiIndex unit(int dim, int axis) {
    MultiIndex m{dim, {0, 0, 0}};
    m.entries[axis] = 1;
    return m;
  }
  MultiIndex plus(const MultiIndex& o) const {
    return MultiIndex{dim, {entries[0] + o.entries[0], entries[1] + o.entries[1],
                            entries[2] + o.entries[2]}};
  }
};

// All multi-indices of the given total order, lexicographic, first entry major.
std::vector<MultiIndex> multi_indices(int dim, int order);

double factorial(int n);

// Scalar field with exact partial derivatives. Implementations are pure and
// must be safe to evaluate concurrently.
struct ScalarField {
  virtual ~ScalarField() = default;

  // Exact partial derivative of multi-index order beta; order 0 is the value.
  virtual double partial(const Point& p, const MultiIndex& beta) const = 0;
  // Highest exact derivative order; -1 means analytic (unlimited).
  virtual int smoothness() const { return -1; }
  // Total degree when the field is polynomial, else -1 (quadrature hint).
  virtual int polynomial_degree() const { return -1; }

  double value(const Point& p) const { return partial(p, MultiIndex::zero(p.dim)); }
  std::array<double, 3> gradient(const Point& p) const;
  SmallMatrix hessian(const Point& p) const;
};

// Polynomial in Cartesian coordinates: sum of coef * x^e0 * y^e1 * z^e2.
struct Polynomial final : public ScalarField {
  struct Term {
    double coef = 0.0;
    MultiIndex power;
  };

  int dim = 2;
  std::vector<Term> terms;  // canonical: sorted by power, like terms merged

  Polynomial() = default;
  explicit Polynomial(int dim_) : dim(dim_) {}

  void add_term(double coef, const MultiIndex& power);
  void normalize();  // sort, merge, drop zero terms

  double partial(const Point& p, const MultiIndex& beta) const override;
  int polynomial_degree() const override;
};

Polynomial poly_sum(const Polynomial& a, const Polynomial& b);
Polynomial poly_product(const Polynomial& a, const Polynomial& b);
Polynomial poly_scaled(const Polynomial& a, double f);

// base(linear * x + shift); derivatives by the affine chain rule, expanded
// over products of the columns of `linear`.
struct AffineComposition final : public ScalarField {
  const ScalarField* base = nullptr;  // not owned; must outlive this object
  SmallMatrix linear;
  Point shift;

  AffineComposition(const ScalarField& b, const SmallMatrix& l, const Point& sh)
      : base(&b), linear(l), shift(sh) {}

  double partial(const Point& p, const MultiIndex& beta) const override;
  int smoothness() const override { return base->smoothness(); }
  int polynomial_degree() const override { return base->polynomial_degree(); }
};

// Iterated directional derivative (v_1 . grad) ... (v_n . grad) base.
struct DirectionalDerivative final : public ScalarField {
  const ScalarField* base = nullptr;  // not owned
  std::vector<std::array<double, 3>> directions;

  DirectionalDerivative(const ScalarField& b, std::vector<std::array<double, 3>> dirs)
      : base(&b), directions(std::move(dirs)) {}

  double partial(const Point& p, const MultiIndex& beta) const override;
  int smoothness() const override;
  int polynomial_degree() const override;
};

// The field x -> (d^gamma base)(x).
struct PartialShift final : public ScalarField {
  const ScalarField* base = nullptr;  // not owned
  MultiIndex gamma;

  PartialShift(const ScalarField& b, const MultiIndex& g) : base(&b), gamma(g) {}

  double partial(const Point& p, const MultiIndex& beta) const override {
    return base->partial(p, beta.plus(gamma));
  }
  int smoothness() const override;
  int polynomial_degree() const override;
};

// a - b, e.g. a field minus its interpolant.
struct Difference final : public ScalarField {
  const ScalarField* a = nullptr;  // not owned
  const ScalarField* b = nullptr;

  Difference(const ScalarField& a_, const ScalarField& b_) : a(&a_), b(&b_) {}

  double partial(const Point& p, const MultiIndex& beta) const override {
    return a->partial(p, beta) - b->partial(p, beta);
  }
  int smoothness() const override;
  int polynomial_degree() const override;
};

}  // namespace aniso
