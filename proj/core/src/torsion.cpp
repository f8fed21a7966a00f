#include "crtorsion/torsion.hpp"

#include <cmath>

#include "crtorsion/detail/kahan.hpp"
#include "crtorsion/errors.hpp"
#include "crtorsion/special_functions.hpp"

namespace crtorsion {

namespace {

using cd = std::complex<double>;

cd alpha_pow(long long alpha, cd minus_two_s) {
  return std::exp(minus_two_s * std::log(static_cast<double>(alpha)));
}

/// Contribution of one x != 0 block:
/// dim chi(Sigma*) [zeta(2s,x)+zeta(2s,1-x)]
///   + sum_{i,j} alpha_i^{-2s} [zeta(2s,x_ij)+zeta(2s,1-x_ij)].
cd kappa_block_nonzero(const SeifertData& sd, const HolonomyBlock& blk, cd s) {
  const Rational chi_star = orbifold_invariants(sd).chi_star;
  const cd two_s = 2.0 * s;
  detail::KahanComplex acc;
  acc.add(static_cast<double>(blk.dim) * to_double(chi_star) *
          pair_zeta(two_s, to_double(blk.x)));
  for (std::size_t i = 0; i < sd.fibers.size(); ++i) {
    const cd apow = alpha_pow(sd.fibers[i].alpha, -two_s);
    for (const Rational& xij : blk.fiber_spectra[i])
      acc.add(apow * pair_zeta(two_s, to_double(xij)));
  }
  return acc.sum();
}

/// Contribution of the x = 0 block:
/// kappa(M,rho)(2 zeta(2s) + 1) + 2 zeta(2s) sum_i dim(V^{0,i})(alpha^{-2s}-1)
///   + sum over x_ij != 0 of alpha^{-2s} [zeta(2s,x_ij)+zeta(2s,1-x_ij)].
cd kappa_block_zero(const HolonomyData& hd, const HolonomyBlock& blk, cd s) {
  const SeifertData& sd = hd.seifert;
  const cd two_s = 2.0 * s;
  const cd zeta2s = riemann_zeta(two_s);
  detail::KahanComplex acc;
  acc.add(static_cast<double>(kappa_m_rho(hd)) * (2.0 * zeta2s + 1.0));
  for (std::size_t i = 0; i < sd.fibers.size(); ++i) {
    const cd apow = alpha_pow(sd.fibers[i].alpha, -two_s);
    const long long v0i = dim_v0i(hd, i);
    if (v0i != 0) acc.add(2.0 * zeta2s * static_cast<double>(v0i) * (apow - 1.0));
    for (const Rational& xij : blk.fiber_spectra[i])
      if (xij.numerator() != 0) acc.add(apow * pair_zeta(two_s, to_double(xij)));
  }
  return acc.sum();
}

}  // namespace

MeroValue kappa_eval(const HolonomyData& hd, std::complex<double> s) {
  require_valid(hd.seifert, hd);
  if (std::abs(s - 0.5) < 1e-10) {
    Rational res = kappa_residue(hd);
    return MeroValue::pole(0.5, to_double(res));
  }
  detail::KahanComplex acc;
  for (const auto& blk : hd.blocks) {
    if (blk.x.numerator() == 0)
      acc.add(kappa_block_zero(hd, blk, s));
    else
      acc.add(kappa_block_nonzero(hd.seifert, blk, s));
  }
  return MeroValue::finite(acc.sum());
}

Rational kappa_residue(const HolonomyData& hd) {
  require_valid(hd.seifert, hd);
  return orbifold_invariants(hd.seifert).chi_orb * Rational(total_dim(hd));
}

double kappa_residue_numeric(const HolonomyData& hd) {
  // (s - 1/2) kappa(s) = R + c1 h + c2 h^2 + ...; Neville on h.
  const double hs[3] = {1e-2, 1e-3, 1e-4};
  double a[3];
  for (int i = 0; i < 3; ++i) {
    std::complex<double> s(0.5 + hs[i], 0.0);
    a[i] = (hs[i] * kappa_eval(hd, s).value()).real();
  }
  double t01 = (a[1] * hs[0] - a[0] * hs[1]) / (hs[0] - hs[1]);
  double t12 = (a[2] * hs[1] - a[1] * hs[2]) / (hs[1] - hs[2]);
  return (t12 * hs[0] - t01 * hs[2]) / (hs[0] - hs[2]);
}

double kappa_prime_zero(const HolonomyData& hd) {
  require_valid(hd.seifert, hd);
  const SeifertData& sd = hd.seifert;
  const double chi_star = to_double(orbifold_invariants(sd).chi_star);
  detail::Kahan acc;
  for (const auto& blk : hd.blocks) {
    if (blk.x.numerator() == 0) {
      // 4 zeta'(0) kappa(M,rho) + 2 sum_i dim(V^{0,i}) ln alpha_i
      //   - 2 sum over x_ij != 0 of ln(2 sin pi x_ij).
      acc.add(-2.0 * std::log(2.0 * kPi) * static_cast<double>(kappa_m_rho(hd)));
      for (std::size_t i = 0; i < sd.fibers.size(); ++i) {
        const long long v0i = dim_v0i(hd, i);
        if (v0i != 0)
          acc.add(2.0 * static_cast<double>(v0i) *
                  std::log(static_cast<double>(sd.fibers[i].alpha)));
        for (const Rational& xij : blk.fiber_spectra[i])
          if (xij.numerator() != 0) acc.add(2.0 * pair_zeta_deriv0(to_double(xij)));
      }
    } else {
      acc.add(2.0 * static_cast<double>(blk.dim) * chi_star *
              pair_zeta_deriv0(to_double(blk.x)));
      for (std::size_t i = 0; i < sd.fibers.size(); ++i)
        for (const Rational& xij : blk.fiber_spectra[i])
          acc.add(2.0 * pair_zeta_deriv0(to_double(xij)));
    }
  }
  return acc.sum();
}

double ray_singer_torsion(const HolonomyData& hd) {
  require_valid(hd.seifert, hd);
  const SeifertData& sd = hd.seifert;
  const double chi_star = to_double(orbifold_invariants(sd).chi_star);

  // Work in logs; the factors are products of 2 sin(pi x) over eigenphases.
  detail::Kahan log_t;
  log_t.add(static_cast<double>(kappa_m_rho(hd)) * std::log(2.0 * kPi));

  double log_det_f = 0.0;  // ln |det(Id - rho(f))| on (V^0)^perp
  for (const auto& blk : hd.blocks)
    if (blk.x.numerator() != 0)
      log_det_f += static_cast<double>(blk.dim) *
                   std::log(2.0 * std::sin(kPi * to_double(blk.x)));
  log_t.add(chi_star * log_det_f);

  for (std::size_t i = 0; i < sd.fibers.size(); ++i) {
    for (const auto& blk : hd.blocks)
      for (const Rational& xij : blk.fiber_spectra[i])
        if (xij.numerator() != 0)
          log_t.add(std::log(2.0 * std::sin(kPi * to_double(xij))));
    log_t.add(-static_cast<double>(dim_v0i(hd, i)) *
              std::log(static_cast<double>(sd.fibers[i].alpha)));
  }
  return std::exp(log_t.sum());
}

}  // namespace crtorsion
