#include "aniso/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace aniso {

namespace {

constexpr double kDegeneracyTol = 1e-14;  // reject |T| < tol * h^d

using Vec3 = std::array<double, 3>;

Vec3 sub(const Point& a, const Point& b) {
  return {a.x[0] - b.x[0], a.x[1] - b.x[1], a.x[2] - b.x[2]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 scale(const Vec3& a, double f) { return {a[0] * f, a[1] * f, a[2] * f}; }

Vec3 axpy(const Vec3& a, const Vec3& b, double f) {
  return {a[0] + f * b[0], a[1] + f * b[1], a[2] + f * b[2]};
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double raw_measure(const Simplex& s) {
  if (s.dim == 2) {
    const Vec3 e1 = sub(s.vertices[1], s.vertices[0]);
    const Vec3 e2 = sub(s.vertices[2], s.vertices[0]);
    return 0.5 * std::abs(e1[0] * e2[1] - e1[1] * e2[0]);
  }
  const Vec3 e1 = sub(s.vertices[1], s.vertices[0]);
  const Vec3 e2 = sub(s.vertices[2], s.vertices[0]);
  const Vec3 e3 = sub(s.vertices[3], s.vertices[0]);
  return std::abs(dot(e1, cross(e2, e3))) / 6.0;
}

double angle_between(const Vec3& u, const Vec3& v) {
  const double c = dot(u, v) / (norm(u) * norm(v));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

double measure(const Simplex& s) {
  const double m = raw_measure(s);
  const auto [h, edges] = diameter_and_edges(s);
  if (m < kDegeneracyTol * std::pow(h, s.dim)) throw Degenerate("simplex measure below tolerance");
  return m;
}

std::pair<double, std::vector<Edge>> diameter_and_edges(const Simplex& s) {
  std::vector<Edge> edges;
  for (int i = 0; i < s.vertex_count(); ++i)
    for (int j = i + 1; j < s.vertex_count(); ++j)
      edges.push_back({norm(sub(s.vertices[j], s.vertices[i])), i, j});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.length != b.length) return a.length < b.length;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  return {edges.back().length, edges};
}

double circumradius(const Simplex& s) {
  measure(s);  // throws Degenerate when the circumcenter solve is meaningless
  // Circumcenter c solves 2 (v_i - v_0) . c = |v_i|^2 - |v_0|^2.
  const Point& v0 = s.vertices[0];
  SmallMatrix m;
  m.dim = s.dim;
  std::array<double, 3> rhs{};
  for (int i = 1; i <= s.dim; ++i) {
    const Vec3 e = sub(s.vertices[i], v0);
    double nsq = 0.0;
    for (int k = 0; k < s.dim; ++k) {
      m.a[i - 1][k] = 2.0 * e[k];
      nsq += s.vertices[i].x[k] * s.vertices[i].x[k] - v0.x[k] * v0.x[k];
    }
    rhs[i - 1] = nsq;
  }
  const auto c = mat_vec(inverse(m), rhs);
  Vec3 r{};
  for (int k = 0; k < s.dim; ++k) r[k] = c[k] - v0.x[k];
  return norm(r);
}

double param_H_T0(const Simplex& s) {
  const double mT = measure(s);
  const auto [h, edges] = diameter_and_edges(s);
  double minprod = edges[0].length;
  if (s.dim == 3) minprod *= edges[1].length;  // two smallest, distinct edge indices
  return h * h / mT * minprod;
}

namespace {

// Longest edge with ties broken by lexicographically smallest index pair.
// `edges` is sorted ascending with that pair order, so ties for the max sit
// at the back in pair order; scan back for the first of the maximal group.
Edge longest_edge(const std::vector<Edge>& edges) {
  const double lmax = edges.back().length;
  for (const Edge& e : edges)
    if (e.length == lmax) return e;
  return edges.back();
}

StandardPosition standard_position_2d(const Simplex& s) {
  const auto [h, edges] = diameter_and_edges(s);
  const Edge lmax = longest_edge(edges);

  StandardPosition sp;
  sp.dim = 2;

  // x1 = vertex opposite the longest edge; x2 the farther endpoint.
  int i1 = 3 - lmax.i - lmax.j;
  int i2 = lmax.i, i3 = lmax.j;
  const double d2 = norm(sub(s.vertices[i2], s.vertices[i1]));
  const double d3 = norm(sub(s.vertices[i3], s.vertices[i1]));
  if (d3 > d2) std::swap(i2, i3);
  sp.relabel = {i1, i2, i3, -1};

  const Vec3 w2 = sub(s.vertices[i2], s.vertices[i1]);
  const Vec3 w3 = sub(s.vertices[i3], s.vertices[i1]);
  const double a1 = norm(w2), a2 = norm(w3);
  sp.alpha = {a1, a2, 0.0};

  const Vec3 u = scale(w2, 1.0 / a1);
  Vec3 uperp = {-u[1], u[0], 0.0};
  if (dot(w3, uperp) < 0.0) {
    uperp = scale(uperp, -1.0);
    sp.mirrored = true;
  }
  sp.shear2d.s = dot(w3, u) / a2;
  sp.shear2d.t = dot(w3, uperp) / a2;
  // Frame roundoff leaves (s,t) unit only approximately; renormalize so the
  // shear direction is exactly unit length.
  const double sn = std::hypot(sp.shear2d.s, sp.shear2d.t);
  sp.shear2d.s /= sn;
  sp.shear2d.t /= sn;

  sp.rotation.dim = 2;
  sp.rotation.a[0][0] = u[0];
  sp.rotation.a[1][0] = u[1];
  sp.rotation.a[0][1] = uperp[0];
  sp.rotation.a[1][1] = uperp[1];
  sp.translation = s.vertices[i1];
  return sp;
}

StandardPosition standard_position_3d(const Simplex& s) {
  const auto [h, edges] = diameter_and_edges(s);
  const Edge lmin = edges[0];  // ascending sort puts the tie-broken minimum first

  // Longest of the four edges sharing exactly one endpoint with lmin.
  std::vector<Edge> incident;
  for (const Edge& e : edges) {
    const int shared = (e.i == lmin.i) + (e.i == lmin.j) + (e.j == lmin.i) + (e.j == lmin.j);
    if (shared == 1) incident.push_back(e);
  }
  const Edge lmaxmin = longest_edge(incident);

  const int shared_v = (lmaxmin.i == lmin.i || lmaxmin.i == lmin.j) ? lmaxmin.i : lmaxmin.j;
  const int cand_c = lmaxmin.i + lmaxmin.j - shared_v;
  const int vert_b = lmin.i + lmin.j - shared_v;
  const int vert_d = 6 - shared_v - cand_c - vert_b;

  // Half-space test against the perpendicular bisector plane of lmaxmin.
  // vert_b always lies in the closed half-space of shared_v (lmin is the
  // global minimum), so the type is decided by vert_d alone; points on the
  // plane count as type (i).
  const Vec3 axis = sub(s.vertices[cand_c], s.vertices[shared_v]);
  const double axis_len = norm(axis);
  const Vec3 u_axis = scale(axis, 1.0 / axis_len);
  Vec3 mid{};
  for (int k = 0; k < 3; ++k)
    mid[k] = 0.5 * (s.vertices[cand_c].x[k] + s.vertices[shared_v].x[k]);
  auto side = [&](int v) {
    Vec3 r{};
    for (int k = 0; k < 3; ++k) r[k] = s.vertices[v].x[k] - mid[k];
    return dot(r, u_axis);
  };
  const double boundary_tol = 1e-14 * h;

  StandardPosition sp;
  sp.dim = 3;
  int i1, i2;
  if (side(vert_d) <= boundary_tol) {
    sp.tet_type = TetType::i;
    i1 = shared_v;
    i2 = cand_c;
  } else {
    sp.tet_type = TetType::ii;
    i1 = cand_c;
    i2 = shared_v;
  }
  // The construction forces x4 into the closed half-space of x1; if roundoff
  // ever breaks that, restore it by swapping the roles and note it.
  if ((side(vert_d) <= boundary_tol) != (side(i1) < 0.0)) {
    std::swap(i1, i2);
    sp.tet_type = (sp.tet_type == TetType::i) ? TetType::ii : TetType::i;
    sp.halfspace_relabeled = true;
  }
  sp.relabel = {i1, i2, vert_b, vert_d};

  const Vec3 w2 = sub(s.vertices[i2], s.vertices[i1]);
  const Vec3 w3 = sub(s.vertices[vert_b], s.vertices[i1]);
  const Vec3 w4 = sub(s.vertices[vert_d], s.vertices[i1]);
  const double a1 = norm(w2);
  const double a2 = (sp.tet_type == TetType::i) ? norm(w3)
                                                : norm(sub(s.vertices[vert_b], s.vertices[i2]));
  const double a3 = norm(w4);
  sp.alpha = {a1, a2, a3};

  // Orthonormal frame: e1 along x1->x2, e2 in the base plane with positive
  // component toward x3, e3 completing it; flip e3 when x4 falls below.
  const Vec3 u1 = scale(w2, 1.0 / a1);
  Vec3 p3 = axpy(w3, u1, -dot(w3, u1));
  const double p3n = norm(p3);
  if (p3n < 1e-300) throw Degenerate("base triangle collapsed");
  const Vec3 u2 = scale(p3, 1.0 / p3n);
  Vec3 u3 = cross(u1, u2);
  if (dot(w4, u3) < 0.0) {
    u3 = scale(u3, -1.0);
    sp.mirrored = true;
  }

  // The u2 component of w3 is p3n by construction; using the norm instead of
  // dot(w3, u2) avoids the quadratic aspect-ratio error the Gram-Schmidt
  // leak would otherwise inject into t1.
  const Vec3 x3t = {dot(w3, u1), p3n, 0.0};
  const Vec3 x4t = {dot(w4, u1), dot(w4, u2), dot(w4, u3)};
  if (sp.tet_type == TetType::i) {
    sp.shear3d.s1 = x3t[0] / a2;
    sp.shear3d.t1 = x3t[1] / a2;
  } else {
    sp.shear3d.s1 = (a1 - x3t[0]) / a2;
    sp.shear3d.t1 = x3t[1] / a2;
  }
  sp.shear3d.s21 = x4t[0] / a3;
  sp.shear3d.s22 = x4t[1] / a3;
  sp.shear3d.t2 = x4t[2] / a3;
  // The type (ii) branch cancels a1 - x3t[0], which amplifies frame roundoff
  // on squashed tetrahedra; renormalize both shear directions so the unit
  // constraints hold exactly regardless of aspect ratio.
  const double n1 = std::hypot(sp.shear3d.s1, sp.shear3d.t1);
  sp.shear3d.s1 /= n1;
  sp.shear3d.t1 /= n1;
  const double n2 = std::sqrt(sp.shear3d.s21 * sp.shear3d.s21 +
                              sp.shear3d.s22 * sp.shear3d.s22 +
                              sp.shear3d.t2 * sp.shear3d.t2);
  sp.shear3d.s21 /= n2;
  sp.shear3d.s22 /= n2;
  sp.shear3d.t2 /= n2;

  sp.rotation.dim = 3;
  for (int k = 0; k < 3; ++k) {
    sp.rotation.a[k][0] = u1[k];
    sp.rotation.a[k][1] = u2[k];
    sp.rotation.a[k][2] = u3[k];
  }
  sp.translation = s.vertices[i1];
  return sp;
}

}  // namespace

StandardPosition standard_position(const Simplex& s) {
  measure(s);  // degeneracy gate
  return s.dim == 2 ? standard_position_2d(s) : standard_position_3d(s);
}

SmallMatrix StandardPosition::a_hat() const {
  SmallMatrix m;
  m.dim = dim;
  for (int i = 0; i < dim; ++i) m.a[i][i] = alpha[i];
  return m;
}

SmallMatrix StandardPosition::a_tilde() const {
  SmallMatrix m = SmallMatrix::identity(dim);
  if (dim == 2) {
    m.a[0][1] = shear2d.s;
    m.a[1][1] = shear2d.t;
    return m;
  }
  m.a[0][1] = (tet_type == TetType::i) ? shear3d.s1 : -shear3d.s1;
  m.a[1][1] = shear3d.t1;
  m.a[0][2] = shear3d.s21;
  m.a[1][2] = shear3d.s22;
  m.a[2][2] = shear3d.t2;
  return m;
}

std::array<Point, 4> StandardPosition::reference_vertices() const {
  if (dim == 2)
    return {Point::xy(0, 0), Point::xy(1, 0), Point::xy(0, 1), Point{2}};
  if (tet_type == TetType::i)
    return {Point::xyz(0, 0, 0), Point::xyz(1, 0, 0), Point::xyz(0, 1, 0), Point::xyz(0, 0, 1)};
  return {Point::xyz(0, 0, 0), Point::xyz(1, 0, 0), Point::xyz(1, 1, 0), Point::xyz(0, 0, 1)};
}

std::array<Point, 4> StandardPosition::standard_vertices() const {
  const SmallMatrix at = a_t();
  const auto ref = reference_vertices();
  std::array<Point, 4> out{};
  for (int n = 0; n <= dim; ++n) {
    const auto y = mat_vec(at, ref[n].x);
    out[n] = Point{dim, y};
  }
  return out;
}

std::array<double, 3> StandardPosition::mathscr_h() const {
  if (dim == 2) return {alpha[0], alpha[1] * shear2d.t, 0.0};
  return {alpha[0], alpha[1] * shear3d.t1, alpha[2] * shear3d.t2};
}

std::array<std::array<double, 3>, 3> StandardPosition::r_vectors() const {
  std::array<std::array<double, 3>, 3> r{};
  r[0] = {1.0, 0.0, 0.0};
  if (dim == 2) {
    r[1] = {shear2d.s, shear2d.t, 0.0};
  } else {
    r[1] = {(tet_type == TetType::i) ? shear3d.s1 : -shear3d.s1, shear3d.t1, 0.0};
    r[2] = {shear3d.s21, shear3d.s22, shear3d.t2};
  }
  return r;
}

double param_H_T(const StandardPosition& sp, double measure, double h) {
  double prod = 1.0;
  for (int i = 0; i < sp.dim; ++i) prod *= sp.alpha[i];
  return prod / measure * h;
}

Angles angles(const Simplex& s) {
  measure(s);
  Angles out;
  if (s.dim == 2) {
    for (int v = 0; v < 3; ++v) {
      const int p = (v + 1) % 3, q = (v + 2) % 3;
      const double ang = angle_between(sub(s.vertices[p], s.vertices[v]),
                                       sub(s.vertices[q], s.vertices[v]));
      out.theta_max = std::max(out.theta_max, ang);
    }
    return out;
  }

  // Max interior angle over the four triangular faces.
  for (int skip = 0; skip < 4; ++skip) {
    int f[3], n = 0;
    for (int v = 0; v < 4; ++v)
      if (v != skip) f[n++] = v;
    for (int v = 0; v < 3; ++v) {
      const int p = f[(v + 1) % 3], q = f[(v + 2) % 3];
      const double ang = angle_between(sub(s.vertices[p], s.vertices[f[v]]),
                                       sub(s.vertices[q], s.vertices[f[v]]));
      out.theta_max = std::max(out.theta_max, ang);
    }
  }

  // Max dihedral angle over the six edges, with outward face normals:
  // interior angle = acos(-n_a . n_b).
  double psi = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      int others[2], n = 0;
      for (int v = 0; v < 4; ++v)
        if (v != i && v != j) others[n++] = v;
      const int k = others[0], l = others[1];
      auto outward_normal = [&](int apex, int opposite) {
        Vec3 nn = cross(sub(s.vertices[j], s.vertices[i]),
                        sub(s.vertices[apex], s.vertices[i]));
        if (dot(nn, sub(s.vertices[opposite], s.vertices[i])) > 0.0) nn = scale(nn, -1.0);
        return nn;
      };
      const Vec3 na = outward_normal(k, l);
      const Vec3 nb = outward_normal(l, k);
      const double c = -dot(na, nb) / (norm(na) * norm(nb));
      psi = std::max(psi, std::acos(std::clamp(c, -1.0, 1.0)));
    }
  }
  out.psi_max = psi;
  return out;
}

double assumption1_margin(const StandardPosition& sp) {
  if (sp.dim != 3) throw InvalidDimension("assumption-1 margin defined for dim 3 only");
  return std::abs(sp.shear3d.s22) * sp.alpha[2] / (sp.alpha[1] * sp.shear3d.t1);
}

GeometricReport full_report(const Simplex& s) {
  GeometricReport r;
  r.dim = s.dim;
  r.measure = measure(s);
  auto [h, edges] = diameter_and_edges(s);
  r.h = h;
  r.edges_sorted = std::move(edges);
  r.H_T0 = param_H_T0(s);
  r.H_over_h = r.H_T0 / r.h;
  r.circumradius = circumradius(s);

  const StandardPosition sp = standard_position(s);
  r.H_T = param_H_T(sp, r.measure, r.h);
  r.alpha_ratio = sp.alpha[0] / sp.alpha[1];  // alpha sorted: a2 <= (a3 <=) a1
  r.mathscr_H = sp.mathscr_h();

  const Angles a = angles(s);
  r.theta_max = a.theta_max;
  r.psi_max = a.psi_max;
  if (s.dim == 3) r.assumption1_M = assumption1_margin(sp);
  return r;
}

}  // namespace aniso
