#pragma once

#include "aniso/fields.hpp"
#include "aniso/geometry.hpp"
#include "aniso/quadrature.hpp"

namespace aniso {

// Lebesgue exponents are 1, 2, or kExpInf (infinity).
inline constexpr int kExpInf = 0;

double inv_exponent(int e);  // 1/e, with 1/infinity = 0

struct NormSpec {
  int m = 1;    // target derivative order
  int q = 2;    // target exponent
  int ell = 2;  // source smoothness order
  int p = 2;    // source exponent

  void validate() const;  // 0 <= m <= ell; exponents in {1, 2, kExpInf}
};

inline constexpr int kDefaultQuadratureDegree = 12;

// Seminorm (sum over |beta| = m of ||d^beta f||_q^q)^(1/q), the plain sum over
// distinct multi-indices. Finite q integrates with exactness 2x the
// polynomial degree when known, otherwise kDefaultQuadratureDegree;
// q = infinity takes the max over the degree-12 nodes plus the vertices
// (exact for the polynomial integrands used here, a lower bound in general).
// quadrature_degree overrides the automatic choice when positive.
double sobolev_seminorm(const Simplex& s, const ScalarField& f, int m, int q,
                        int quadrature_degree = 0);

enum class RhsMode { HScaled, Directional };

// Anisotropic interpolation bound right-hand side:
//   |T|^(1/q-1/p) (H_T0/h)^m  x
//     HScaled:     sum over |gamma| = ell-m of H^gamma
//                  |d^gamma (f o Phi)|_{W^{m,p}} on the simplex rotated into
//                  standard position (Phi the rigid part of the placement);
//   Directional:   sum over |gamma| = ell-m of alpha^gamma
//                  |(directional d)^gamma f|_{W^{m,p}} on s itself, with the
//                  derivative directions rotation * r_i.
double anisotropic_rhs(const Simplex& s, const ScalarField& field, const NormSpec& spec,
                       RhsMode mode);

// Classical bound right-hand side:
//   |T|^(1/q-1/p) (alpha_max/alpha_min)^m (H_T0/h)^m h^(ell+1-m)
//     |f|_{W^(ell+1,p)} on s.
double classical_rhs(const Simplex& s, const ScalarField& field, const NormSpec& spec);

}  // namespace aniso
