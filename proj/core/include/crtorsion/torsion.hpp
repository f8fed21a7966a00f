#pragma once

#include <complex>

#include "crtorsion/mero_value.hpp"
#include "crtorsion/rational.hpp"
#include "crtorsion/seifert_model.hpp"

namespace crtorsion {

/// Torsion function kappa(s) in Hurwitz closed form, summed blockwise in a
/// fixed order. Inside |s - 1/2| < 1e-10 returns the pole variant with the
/// exact residue chi(Sigma) dim V. Block selection (x = 0 vs x != 0,
/// x_{ij} = 0 vs != 0) is decided on the exact rationals.
MeroValue kappa_eval(const HolonomyData& hd, std::complex<double> s);

/// Residue of kappa at s = 1/2 as an exact rational: chi(Sigma) * dim V.
Rational kappa_residue(const HolonomyData& hd);

/// Numeric residue extraction: (s - 1/2) kappa(s) at s = 1/2 + h,
/// h in {1e-2, 1e-3, 1e-4}, Richardson-extrapolated to h = 0.
double kappa_residue_numeric(const HolonomyData& hd);

/// kappa'(0) in closed form (Lerch). Terms with x_{ij} = 0 are excluded
/// exactly; the x = 0 block contributes -2 ln(2 pi) kappa(M,rho) and the
/// +2 sum_i dim(V^{0,i}) ln alpha_i piece.
double kappa_prime_zero(const HolonomyData& hd);

/// Ray-Singer torsion by the determinant product
///   (2 pi)^{kappa(M,rho)} |det(Id - rho(f)|_{(V^0)perp})|^{chi(Sigma*)}
///   prod_i |det(Id - rho(f_i)|_{(V^{0,i})perp})| / alpha_i^{dim V^{0,i}},
/// with each determinant expanded over eigenphases as products of
/// 2 sin(pi x). Equals exp(-kappa_prime_zero/2); the two routes share no
/// code.
double ray_singer_torsion(const HolonomyData& hd);

}  // namespace crtorsion
