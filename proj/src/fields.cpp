#include "aniso/fields.hpp"

#include <algorithm>
#include <cmath>

namespace aniso {

namespace {

double ipow(double x, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= x;
  return r;
}

bool power_less(const MultiIndex& a, const MultiIndex& b) {
  for (int k = 0; k < 3; ++k) {
    if (a.entries[k] != b.entries[k]) return a.entries[k] < b.entries[k];
  }
  return false;
}

// Sum over all ways of replacing each direction by one of its components:
// coef * prod dirs[k][j_k] * (d^{multiset j} base)(q).
double directional_expand(const ScalarField& base, const Point& q, int dim,
                          const std::vector<std::array<double, 3>>& dirs, std::size_t idx,
                          MultiIndex& gamma, double coef) {
  if (coef == 0.0) return 0.0;
  if (idx == dirs.size()) return coef * base.partial(q, gamma);
  double sum = 0.0;
  for (int j = 0; j < dim; ++j) {
    if (dirs[idx][j] == 0.0) continue;
    ++gamma.entries[j];
    sum += directional_expand(base, q, dim, dirs, idx + 1, gamma, coef * dirs[idx][j]);
    --gamma.entries[j];
  }
  return sum;
}

}  // namespace

std::vector<MultiIndex> multi_indices(int dim, int order) {
  if (dim != 2 && dim != 3) throw InvalidDimension("multi-index dimension must be 2 or 3");
  if (order < 0) throw Error("multi-index order must be non-negative");
  std::vector<MultiIndex> out;
  for (int a = order; a >= 0; --a) {
    if (dim == 2) {
      out.push_back(MultiIndex{2, {a, order - a, 0}});
    } else {
      for (int b = order - a; b >= 0; --b)
        out.push_back(MultiIndex{3, {a, b, order - a - b}});
    }
  }
  return out;
}

double factorial(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

std::array<double, 3> ScalarField::gradient(const Point& p) const {
  std::array<double, 3> g{};
  for (int i = 0; i < p.dim; ++i) g[i] = partial(p, MultiIndex::unit(p.dim, i));
  return g;
}

SmallMatrix ScalarField::hessian(const Point& p) const {
  SmallMatrix h;
  h.dim = p.dim;
  for (int i = 0; i < p.dim; ++i) {
    for (int j = i; j < p.dim; ++j) {
      const double v = partial(p, MultiIndex::unit(p.dim, i).plus(MultiIndex::unit(p.dim, j)));
      h.a[i][j] = v;
      h.a[j][i] = v;
    }
  }
  return h;
}

void Polynomial::add_term(double coef, const MultiIndex& power) {
  terms.push_back({coef, power});
  normalize();
}

void Polynomial::normalize() {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return power_less(a.power, b.power); });
  std::vector<Term> merged;
  for (const Term& t : terms) {
    if (!merged.empty() && !power_less(merged.back().power, t.power) &&
        !power_less(t.power, merged.back().power)) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0.0; });
  terms = std::move(merged);
}

double Polynomial::partial(const Point& p, const MultiIndex& beta) const {
  double sum = 0.0;
  for (const Term& t : terms) {
    double c = t.coef;
    bool vanishes = false;
    for (int k = 0; k < dim && !vanishes; ++k) {
      const int e = t.power.entries[k], b = beta.entries[k];
      if (b > e) {
        vanishes = true;
        break;
      }
      for (int r = 0; r < b; ++r) c *= (e - r);  // falling factorial
    }
    if (vanishes) continue;
    double v = c;
    for (int k = 0; k < dim; ++k) v *= ipow(p.x[k], t.power.entries[k] - beta.entries[k]);
    sum += v;
  }
  return sum;
}

int Polynomial::polynomial_degree() const {
  int deg = 0;
  for (const Term& t : terms) deg = std::max(deg, t.power.order());
  return deg;
}

Polynomial poly_sum(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.dim);
  r.terms = a.terms;
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  r.normalize();
  return r;
}

Polynomial poly_product(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.dim);
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) r.terms.push_back({ta.coef * tb.coef, ta.power.plus(tb.power)});
  r.normalize();
  return r;
}

Polynomial poly_scaled(const Polynomial& a, double f) {
  Polynomial r = a;
  for (auto& t : r.terms) t.coef *= f;
  r.normalize();
  return r;
}

double AffineComposition::partial(const Point& p, const MultiIndex& beta) const {
  Point q{p.dim, {shift.x[0], shift.x[1], shift.x[2]}};
  for (int i = 0; i < p.dim; ++i)
    for (int j = 0; j < p.dim; ++j) q.x[i] += linear.a[i][j] * p.x[j];

  std::vector<std::array<double, 3>> dirs;
  for (int axis = 0; axis < p.dim; ++axis) {
    std::array<double, 3> col{};
    for (int i = 0; i < p.dim; ++i) col[i] = linear.a[i][axis];
    for (int r = 0; r < beta.entries[axis]; ++r) dirs.push_back(col);
  }
  MultiIndex gamma = MultiIndex::zero(p.dim);
  return directional_expand(*base, q, p.dim, dirs, 0, gamma, 1.0);
}

double DirectionalDerivative::partial(const Point& p, const MultiIndex& beta) const {
  std::vector<std::array<double, 3>> dirs = directions;
  for (int axis = 0; axis < p.dim; ++axis) {
    std::array<double, 3> unit{};
    unit[axis] = 1.0;
    for (int r = 0; r < beta.entries[axis]; ++r) dirs.push_back(unit);
  }
  MultiIndex gamma = MultiIndex::zero(p.dim);
  return directional_expand(*base, p, p.dim, dirs, 0, gamma, 1.0);
}

int DirectionalDerivative::smoothness() const {
  const int s = base->smoothness();
  return s < 0 ? -1 : std::max(0, s - static_cast<int>(directions.size()));
}

int DirectionalDerivative::polynomial_degree() const {
  const int d = base->polynomial_degree();
  return d < 0 ? -1 : std::max(0, d - static_cast<int>(directions.size()));
}

int PartialShift::smoothness() const {
  const int s = base->smoothness();
  return s < 0 ? -1 : std::max(0, s - gamma.order());
}

int PartialShift::polynomial_degree() const {
  const int d = base->polynomial_degree();
  return d < 0 ? -1 : std::max(0, d - gamma.order());
}

int Difference::smoothness() const {
  const int sa = a->smoothness(), sb = b->smoothness();
  if (sa < 0) return sb;
  if (sb < 0) return sa;
  return std::min(sa, sb);
}

int Difference::polynomial_degree() const {
  const int da = a->polynomial_degree(), db = b->polynomial_degree();
  if (da < 0 || db < 0) return -1;
  return std::max(da, db);
}

}  // namespace aniso
