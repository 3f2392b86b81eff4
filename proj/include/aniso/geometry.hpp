#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "aniso/errors.hpp"
#include "aniso/smallmat.hpp"

namespace aniso {

struct Point {
  int dim = 2;
  std::array<double, 3> x{};

  static Point xy(double a, double b) { return Point{2, {a, b, 0.0}}; }
  static Point xyz(double a, double b, double c) { return Point{3, {a, b, c}}; }
};

// Triangle (dim 2) or tetrahedron (dim 3); vertices[0..dim] are used.
struct Simplex {
  int dim = 2;
  std::array<Point, 4> vertices{};

  int vertex_count() const { return dim + 1; }
  static Simplex triangle(Point a, Point b, Point c) { return Simplex{2, {a, b, c, Point{2}}}; }
  static Simplex tetrahedron(Point a, Point b, Point c, Point d) { return Simplex{3, {a, b, c, d}}; }
};

struct Edge {
  double length = 0.0;
  int i = 0, j = 0;  // vertex indices, i < j
};

struct Shear2D {
  double s = 0.0, t = 1.0;  // s^2 + t^2 = 1, t > 0
};

struct Shear3D {
  double s1 = 0.0, t1 = 1.0;            // s1^2 + t1^2 = 1, s1 > 0, t1 > 0
  double s21 = 0.0, s22 = 0.0, t2 = 1.0;  // s21^2 + s22^2 + t2^2 = 1, t2 > 0
};

enum class TetType { i, ii };

// Canonical placement of a simplex: the affine map onto it factors as
// x = rotation * (a_tilde * a_hat * xref) + translation, where a_hat is the
// diagonal dilation diag(alpha) and a_tilde the unit shear. The rotation is
// orthogonal and absorbs any reflection (mirrored records its handedness).
struct StandardPosition {
  int dim = 2;
  std::array<double, 3> alpha{};  // alpha[0..dim-1]; dim 3 satisfies a2 <= a3 <= a1
  Shear2D shear2d;
  Shear3D shear3d;
  TetType tet_type = TetType::i;  // meaningful for dim 3
  SmallMatrix rotation;           // orthogonal, det = +1 or -1
  Point translation;
  bool mirrored = false;
  std::array<int, 4> relabel{};   // relabel[n] = original index of canonical vertex n
  bool halfspace_relabeled = false;  // diagnostic: apex/base labels swapped to fix half-spaces

  SmallMatrix a_hat() const;    // diag(alpha)
  SmallMatrix a_tilde() const;  // unit shear (type-dependent in 3-D)
  SmallMatrix a_t() const { return a_tilde() * a_hat(); }

  // Reference vertices mapped by a_t: the simplex in standard position.
  std::array<Point, 4> reference_vertices() const;
  std::array<Point, 4> standard_vertices() const;

  // Anisotropic length scales: {a1, a2*t} in 2-D, {a1, a2*t1, a3*t2} in 3-D.
  std::array<double, 3> mathscr_h() const;

  // Unit direction vectors of the factorization, expressed in the standard
  // frame. Rotate by `rotation` to get directions in the original frame.
  std::array<std::array<double, 3>, 3> r_vectors() const;
};

struct GeometricReport {
  int dim = 2;
  double h = 0.0;           // diameter (longest edge)
  double measure = 0.0;     // area or volume
  double H_T0 = 0.0;        // h^2/|T| * min edge (2-D) or * product of two smallest edges (3-D)
  double H_T = 0.0;         // (prod alpha / |T|) * h
  double H_over_h = 0.0;    // H_T0 / h
  double alpha_ratio = 0.0; // max alpha / min alpha
  double circumradius = 0.0;
  std::array<double, 3> mathscr_H{};
  double theta_max = 0.0;               // max face angle (radians)
  std::optional<double> psi_max;        // max dihedral angle (3-D only)
  std::optional<double> assumption1_M;  // |s22| * a3 / (a2 t1) (3-D only)
  std::vector<Edge> edges_sorted;       // ascending, ties by vertex-index pair
};

// Area (2-D) or volume (3-D); throws Degenerate below 1e-14 * h^d.
double measure(const Simplex& s);

// Longest edge and all edges sorted ascending (stable ties by index pair).
std::pair<double, std::vector<Edge>> diameter_and_edges(const Simplex& s);

// Radius of the circumscribed circle/sphere via the circumcenter solve.
double circumradius(const Simplex& s);

// h^2/|T| * (min edge) in 2-D; h^2/|T| * (two smallest edges' product) in 3-D.
double param_H_T0(const Simplex& s);

// Relabel, rotate, translate, and possibly mirror the simplex into the
// canonical frame; returns the full factorization.
StandardPosition standard_position(const Simplex& s);

// (prod alpha / measure) * h.
double param_H_T(const StandardPosition& sp, double measure, double h);

struct Angles {
  double theta_max = 0.0;
  std::optional<double> psi_max;
};

// Max interior vertex angle (2-D) or max face angle plus max dihedral
// angle from outward normals (3-D).
Angles angles(const Simplex& s);

// Required Assumption-1 constant |s22| * a3 / (a2 t1); 3-D only.
double assumption1_margin(const StandardPosition& sp);

GeometricReport full_report(const Simplex& s);

}  // namespace aniso
