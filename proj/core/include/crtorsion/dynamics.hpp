#pragma once

#include <complex>
#include <vector>

#include "crtorsion/mero_value.hpp"
#include "crtorsion/rational.hpp"
#include "crtorsion/seifert_model.hpp"
#include "crtorsion/spectral_genus.hpp"

namespace crtorsion {

/// A free homotopy class of closed Reeb orbits: the n-th power of the
/// generic fiber f, or f_i^n around exceptional fiber i with n not a
/// multiple of alpha_i.
struct OrbitClass {
  enum class Kind { kGeneric, kExceptional };

  Kind kind = Kind::kGeneric;
  long long fiber = -1;  // -1 for generic classes
  long long n = 0;
  double length = 0.0;   // 2 pi n, or 2 pi n / alpha_i
  Rational fuller;       // chi(Sigma)/n, or 1/n
  double rtr = 0.0;      // real trace of the holonomy along the class
};

/// All orbit classes with length <= max_length, sorted by length, then
/// generic before exceptional, then fiber index, then n.
std::vector<OrbitClass> enumerate_orbits(const SeifertData& sd,
                                         const HolonomyData& hd,
                                         double max_length);

/// Dynamical zeta Z_rho(s) = sum_C ind(C) rtr(rho(C)) l(C)^s for
/// Re(s) <= -0.2: explicit orbit sum up to a length cut, plus per-family
/// tail completions (Euler-Maclaurin for unit phases, iterated Abel
/// summation by parts for oscillatory ones) with a rigorous bound.
SeriesValue z_rho_series(const SeifertData& sd, const HolonomyData& hd,
                         std::complex<double> s, double tol);

/// Closed form f(s) (kappa(s/2) - kappa(M,rho)). Pole variants at the
/// surviving poles of f (s = 0 and negative even integers) and at s = 1.
MeroValue z_rho_closed(const SeifertData& sd, const HolonomyData& hd,
                       std::complex<double> s);

/// lim_{s->0} (Z_rho(s) + kappa(M,rho)/s), evaluated at symmetric pairs
/// s = ±1e-3, ±1e-4 and Richardson-extrapolated. Equals -ln T_RS; that
/// agreement is asserted to 1e-6 and the extrapolation residual must stay
/// under 1e-5 (else tolerance_error).
double regularized_z_at_zero(const SeifertData& sd, const HolonomyData& hd);

/// Analytic continuation at s = 0 of Fried's dynamical function
/// Z_F(s) = -sum_C ind(C) tr(rho(C)) e^{-s l(C)}, in the acyclic-type case
/// (no x = 0 block, hence no vanishing x_{ij}). Principal-branch logarithms;
/// |exp Z_F(0)| is the Ray-Singer torsion. Throws validation_error naming
/// the offending block when the precondition fails.
std::complex<double> fried_z_zero(const SeifertData& sd, const HolonomyData& hd);

/// Dynamical theta function
/// (1/sqrt(pi t)) sum_C l(C) ind(C) rtr(rho(C)) e^{-l(C)^2/4t},
/// truncated under a Gaussian tail bound <= tol. Domain error for t <= 0.
HeatValue dynamical_theta(const SeifertData& sd, const HolonomyData& hd,
                          double t, double tol);

}  // namespace crtorsion
