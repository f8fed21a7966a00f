#include <mpfr.h>

#include <cmath>
#include <numeric>

#include "crtorsion/errors.hpp"
#include "crtorsion/special_functions.hpp"
#include "crtorsion/spectral_genus.hpp"

namespace crtorsion {

// The remainder tr - dim V sqrt(pi) chi(Sigma)/sqrt(t) sits around
// e^{-pi^2/t} times the trace magnitude, far below binary64 resolution on
// the interesting t range, so the whole cancellation runs in MPFR with the
// working precision scaled to t.
double spectral_heat_log_remainder(const HolonomyData& hd, double t) {
  require_valid(hd.seifert, hd);
  if (!(t > 0.0))
    throw std::domain_error("spectral_heat_log_remainder: t must be > 0");

  const long bits =
      96 + static_cast<long>(std::ceil(1.4 * (kPi * kPi / t) / std::log(2.0)));
  const double cut =
      std::sqrt(1.2 * static_cast<double>(bits) * std::log(2.0) / t) + 2.0;

  mpfr_t acc, term, lam2, mt;
  mpfr_inits2(bits, acc, term, lam2, mt, nullptr);
  mpfr_set_d(mt, t, MPFR_RNDN);

  mpfr_set_si(acc, kappa_m_rho(hd), MPFR_RNDN);
  for (const auto& blk : hd.blocks) {
    const long long p = blk.x.numerator();
    const long long q = blk.x.denominator();
    const bool x_is_zero = p == 0;
    const double x = to_double(blk.x);
    const long long n_lo = static_cast<long long>(std::floor(-cut - x));
    const long long n_hi = static_cast<long long>(std::ceil(cut - x));
    for (long long n = n_lo; n <= n_hi; ++n) {
      if (x_is_zero && n == 0) continue;
      const long long num = n * q + p;  // lambda = -num/q
      if (num == 0) continue;
      if (std::abs(static_cast<double>(num) / static_cast<double>(q)) > cut) continue;
      const long long chi = chi_genus(hd.seifert, blk, n);
      if (chi == 0) continue;
      mpfr_set_si(lam2, num, MPFR_RNDN);
      mpfr_sqr(lam2, lam2, MPFR_RNDN);
      mpfr_div_si(lam2, lam2, q * q, MPFR_RNDN);
      mpfr_mul(term, lam2, mt, MPFR_RNDN);
      mpfr_neg(term, term, MPFR_RNDN);
      mpfr_exp(term, term, MPFR_RNDN);
      mpfr_mul_si(term, term, chi, MPFR_RNDN);
      mpfr_add(acc, acc, term, MPFR_RNDN);
    }
  }

  // Subtract dim V sqrt(pi) chi(Sigma) / sqrt(t).
  OrbifoldInvariants inv = orbifold_invariants(hd.seifert);
  mpfr_const_pi(term, MPFR_RNDN);
  mpfr_div(term, term, mt, MPFR_RNDN);
  mpfr_sqrt(term, term, MPFR_RNDN);
  mpfr_mul_si(term, term, total_dim(hd) * inv.chi_orb.numerator(), MPFR_RNDN);
  mpfr_div_si(term, term, inv.chi_orb.denominator(), MPFR_RNDN);
  mpfr_sub(acc, acc, term, MPFR_RNDN);

  double result;
  if (mpfr_zero_p(acc)) {
    result = -std::numeric_limits<double>::infinity();
  } else {
    mpfr_abs(acc, acc, MPFR_RNDN);
    mpfr_log(acc, acc, MPFR_RNDN);
    result = mpfr_get_d(acc, MPFR_RNDN);
  }
  mpfr_clears(acc, term, lam2, mt, nullptr);
  return result;
}

}  // namespace crtorsion
