#pragma once

#include <complex>

#include "crtorsion/errors.hpp"
#include "crtorsion/mero_value.hpp"

namespace crtorsion {

inline constexpr double kPi = 3.14159265358979323846;

/// Principal branch of ln Gamma(z) for Re(z) > 0 (Lanczos, g = 607/128,
/// 15 terms). Callers needing the left half-plane go through reflection
/// themselves; f_factor below does.
std::complex<double> log_gamma(std::complex<double> z);

/// Analytic continuation of sum_{n>=0} (n+a)^{-s} for a in (0,1],
/// Euler-Maclaurin with Bernoulli corrections through B_24, argument
/// shifted past max(10, |s|).
///
/// Throws pole_error when |s-1| < 1e-12 (simple pole, residue 1) and
/// std::domain_error when a is outside (0,1].
std::complex<double> hurwitz_zeta(std::complex<double> s, double a);

/// hurwitz_zeta(s, 1).
std::complex<double> riemann_zeta(std::complex<double> s);

/// zeta(s,x) + zeta(s,1-x) for x in (0,1). x handed in as exactly 1
/// degenerates both terms to a = 1, i.e. 2 zeta(s).
/// Throws pole_error at s = 1 with residue 2.
std::complex<double> pair_zeta(std::complex<double> s, double x);

/// d/ds [zeta(s,x) + zeta(s,1-x)] at s = 0, in closed form
/// -ln(2 sin(pi x)) = -ln|1 - e^{2 i pi x}|. Domain error at x = 0 or 1.
double pair_zeta_deriv0(double x);

/// f(s) = Gamma(s) cos(pi s / 2).
///
/// At negative odd integers the Gamma pole cancels the cosine zero and the
/// finite limit is returned (f(-1) = -pi/2, f(-3) = pi/12, ...). At s = 0
/// and negative even integers a pole marker carries location and residue
/// (-1)^m / (2m)! at s = -2m. Never NaN.
MeroValue f_factor(std::complex<double> s);

}  // namespace crtorsion
