#pragma once

#include <complex>

#include "crtorsion/rational.hpp"
#include "crtorsion/seifert_model.hpp"

namespace crtorsion {

/// One Fourier mode of iT on a block: lambda = -(n+x) and the holomorphic
/// genus chi of the associated orbifold bundle.
struct ModeGenus {
  Rational x;
  long long n = 0;
  Rational lambda;
  long long chi = 0;
};

/// Value plus the rigorous truncation bound that comes with it.
struct SeriesValue {
  std::complex<double> value{};
  double tail_bound = 0.0;
};

struct HeatValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

/// Indicator of Eq-style congruence: recovers k_{ij} = alpha * x_ij - x
/// (must be an integer) and returns 1 iff n - k_{ij} lies in alpha Z.
/// Exact integer arithmetic throughout.
int delta_indicator(long long n, const Rational& x_ij, const Rational& x,
                    long long alpha);

/// Holomorphic genus of the weight-n mode bundle, computed two ways
/// (puncture count with delta indicators, and fractional-part corrections
/// with the beta exponents) which must agree; disagreement throws.
long long chi_genus(const SeifertData& sd, const HolonomyBlock& block, long long n);

ModeGenus mode_genus(const SeifertData& sd, const HolonomyBlock& block, long long n);

/// Rational degree dim(V^x) * lambda * d(L) of the mode bundle.
Rational degree_v_lambda(const SeifertData& sd, const HolonomyBlock& block,
                         long long n);

/// Direct Dirichlet mode sum kappa(s) = sum chi / |lambda|^{2s} + kappa(M,rho)
/// over all nonzero modes, truncated once the rigorous tail bound drops
/// under tol. Requires Re(s) >= 0.75; throws tolerance_error when tol is
/// unreachable within the 10^7-mode budget.
SeriesValue kappa_direct_series(const HolonomyData& hd, std::complex<double> s,
                                double tol);

/// Torsion heat trace kappa(M,rho) + sum_{lambda != 0} chi e^{-t lambda^2},
/// truncated under a Gaussian tail bound <= tol. Domain error for t <= 0.
HeatValue spectral_heat_trace(const HolonomyData& hd, double t, double tol);

/// ln |spectral heat trace - dim V sqrt(pi) chi(Sigma) / sqrt(t)|, computed
/// in extended precision (MPFR) so the cancellation down to e^{-C/t} is
/// observable far below the binary64 noise floor of the plain trace.
double spectral_heat_log_remainder(const HolonomyData& hd, double t);

}  // namespace crtorsion
