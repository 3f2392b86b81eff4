#pragma once

#include <map>
#include <string>
#include <vector>

#include "aniso/errors.hpp"
#include "aniso/fields.hpp"
#include "aniso/geometry.hpp"
#include "aniso/interpolation.hpp"
#include "aniso/norms.hpp"

namespace aniso {

enum class FamilyId { RightAngled2D, Dagger2D, Blade2D, Tetra7_1_3, Sliver, ConvI, ConvII };

// Degenerating element family; the scale is s directly or s = 1/N when N > 0.
// Exponent use per family:
//   RightAngled2D: eps            (0,0), (s,0), (0,s^eps)
//   Dagger2D:      eps, delta     (0,0), (s,0), (s^delta, s^eps)
//   Blade2D:       eps            (0,0), (2s,0), (s, s^eps)
//   Tetra7_1_3:    eps,delta,gamma(0,0,0), (2s,0,0),
//                                 (2s - sqrt(4s^2 - s^(2 gamma)), s^gamma, 0),
//                                 (s^delta, 0, s^eps)
//   Sliver:        eps1, eps2     (s^eps2,0,0), (-s^eps2,0,0),
//                                 (0,-s,s^eps1), (0,s,s^eps1)
//   ConvI:         eps, delta     (0,0,0), (s,0,0), (0,s^eps,0), (0,0,s^delta)
//   ConvII:        eps            (0,0,0), (s,0,0), (s/2,s^eps,0), (0,0,s)
struct FamilySpec {
  FamilyId family_id = FamilyId::RightAngled2D;
  double eps = 0.0, delta = 0.0, gamma = 0.0, eps1 = 0.0, eps2 = 0.0;
  double s = 0.0;
  int N = 0;

  double scale() const { return N > 0 ? 1.0 / N : s; }
};

// Exact vertex coordinates; throws InvalidFamilyParams when the scale is
// outside (0,1) or an exponent violates the family's constraint.
Simplex family_generate(const FamilySpec& spec);

struct StudyRow {
  int N = 0;
  double s = 0.0;
  std::map<std::string, double> quantities;
};

// Per N: L6_over_L1, h3_over_measure, H_over_h, R3_over_h for the sliver
// family at scale 1/N.
std::vector<StudyRow> sliver_table(double eps1, double eps2, const std::vector<int>& n_list);

// Interpolation error Err = |f0 - I f0|_{W^(m,q)} per level with
// f0 = x^2 + y^2/4 + z^2, plus the observed rate r = log2(Err_s / Err_(s/2))
// from the second row on. n_list must double at each step.
std::vector<StudyRow> run_convergence(FamilyId family, double eps, double delta,
                                      const std::vector<int>& n_list, const OperatorSpec& op,
                                      const NormSpec& norm);

enum class BoundKind { TheoremA, TheoremB_H, TheoremB_dir };

struct BoundReport {
  FamilySpec family;
  std::vector<double> levels;  // s values
  std::vector<double> lhs;     // |f - I f|_{W^(m,q)}
  std::vector<double> rhs;     // bound right-hand side
  std::vector<double> ratio;   // lhs/rhs; +inf when rhs = 0 < lhs
  double ratio_max = 0.0;      // over finite ratios
  bool zero_rhs = false;       // some level had rhs = 0 with lhs > 0
};

// Measured bound quotient across a degenerating family. The interpolation
// operator is Lagrange of degree max(1, ell-1), the smallest degree the
// bounds cover. A bounded ratio across the family is the empirical content
// of the estimate.
BoundReport measure_bound_constant(const FamilySpec& family, const ScalarField& field,
                                   BoundKind bound, const NormSpec& norm,
                                   const std::vector<double>& s_levels);

// Sharp constant of the directional inverse inequality on P^k:
//   C = H_i * max ||d phi_h / dx_i||_{L^2} / ||phi_h||_{L^2},
// the max over P^k computed from the generalized eigenproblem of the
// directional-stiffness Gram against the mass Gram, both assembled by exact
// quadrature over the simplex placed in standard position (the directional
// axis i is 1-based and refers to the standard frame). Only p = q = 2 is
// implemented.
double inverse_constant(const Simplex& s, int k, int axis_i, int p = 2, int q = 2);

// The convergence-study field x^2 + y^2/4 + z^2 (3-D) or x^2 + y^2 (2-D).
Polynomial default_bound_field(int dim);

}  // namespace aniso
