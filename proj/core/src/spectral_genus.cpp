#include "crtorsion/spectral_genus.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "crtorsion/detail/kahan.hpp"
#include "crtorsion/errors.hpp"
#include "crtorsion/special_functions.hpp"

namespace crtorsion {

namespace {

long long mod_nonneg(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

/// k_{ij} = alpha * x_ij - x; the fiber congruence makes it an integer.
long long k_exponent(const Rational& x_ij, const Rational& x, long long alpha) {
  Rational k = x_ij * Rational(alpha) - x;
  if (!is_integer(k))
    throw validation_error("fiber congruence violated: alpha*x_ij - x not integral");
  return k.numerator();
}

/// chi by puncture count plus delta indicators.
long long chi_by_delta(const SeifertData& sd, const HolonomyBlock& block, long long n) {
  long long chi_star = 2 - 2 * sd.genus - static_cast<long long>(sd.fibers.size());
  long long chi = block.dim * chi_star;
  for (std::size_t i = 0; i < sd.fibers.size(); ++i)
    for (const Rational& xij : block.fiber_spectra[i])
      chi += delta_indicator(n, xij, block.x, sd.fibers[i].alpha);
  return chi;
}

/// chi by the fractional-part corrections with the beta exponents:
/// dim (2-2g) - sum_{i,j} ({(-n+k)beta/alpha} + {(n-k)beta/alpha}).
long long chi_by_fractional(const SeifertData& sd, const HolonomyBlock& block,
                            long long n) {
  Rational chi = Rational(block.dim * (2 - 2 * sd.genus));
  for (std::size_t i = 0; i < sd.fibers.size(); ++i) {
    const long long alpha = sd.fibers[i].alpha;
    const long long beta = sd.fibers[i].beta;
    for (const Rational& xij : block.fiber_spectra[i]) {
      long long k = k_exponent(xij, block.x, alpha);
      long long r1 = mod_nonneg((-n + k) * beta, alpha);
      long long r2 = mod_nonneg((n - k) * beta, alpha);
      chi -= Rational(r1, alpha) + Rational(r2, alpha);
    }
  }
  if (!is_integer(chi))
    throw validation_error("genus formula did not produce an integer");
  return chi.numerator();
}

/// chi is periodic in n with period lcm(alpha_i); cache one period per
/// block when it is small enough.
struct BlockChi {
  long long period = 1;
  std::vector<long long> values;  // chi for n = 0..period-1, empty if uncached

  long long at(const SeifertData& sd, const HolonomyBlock& block, long long n) const {
    if (values.empty()) return chi_genus(sd, block, n);
    return values[static_cast<std::size_t>(mod_nonneg(n, period))];
  }
};

BlockChi make_block_chi(const SeifertData& sd, const HolonomyBlock& block) {
  BlockChi bc;
  for (const Fiber& f : sd.fibers) bc.period = std::lcm(bc.period, f.alpha);
  if (bc.period <= 1 << 16) {
    bc.values.reserve(static_cast<std::size_t>(bc.period));
    for (long long n = 0; n < bc.period; ++n)
      bc.values.push_back(chi_genus(sd, block, n));
  }
  return bc;
}

/// Uniform per-mode bound |chi| <= dim (|chi(Sigma*)| + #fibers).
double chi_bound(const SeifertData& sd, const HolonomyBlock& block) {
  long long chi_star = 2 - 2 * sd.genus - static_cast<long long>(sd.fibers.size());
  return static_cast<double>(block.dim) *
         (static_cast<double>(std::llabs(chi_star)) +
          static_cast<double>(sd.fibers.size()));
}

}  // namespace

int delta_indicator(long long n, const Rational& x_ij, const Rational& x,
                    long long alpha) {
  long long k = k_exponent(x_ij, x, alpha);
  return mod_nonneg(n - k, alpha) == 0 ? 1 : 0;
}

long long chi_genus(const SeifertData& sd, const HolonomyBlock& block, long long n) {
  long long a = chi_by_delta(sd, block, n);
  long long b = chi_by_fractional(sd, block, n);
  if (a != b)
    throw validation_error("genus formulas disagree at n = " + std::to_string(n));
  return a;
}

ModeGenus mode_genus(const SeifertData& sd, const HolonomyBlock& block, long long n) {
  ModeGenus m;
  m.x = block.x;
  m.n = n;
  m.lambda = -(Rational(n) + block.x);
  m.chi = chi_genus(sd, block, n);
  return m;
}

Rational degree_v_lambda(const SeifertData& sd, const HolonomyBlock& block,
                         long long n) {
  Rational lambda = -(Rational(n) + block.x);
  return Rational(block.dim) * lambda * orbifold_invariants(sd).d_l;
}

SeriesValue kappa_direct_series(const HolonomyData& hd, std::complex<double> s,
                                double tol) {
  require_valid(hd.seifert, hd);
  const double sigma = s.real();
  if (sigma < 0.75)
    throw std::domain_error("kappa_direct_series: requires Re(s) >= 0.75");
  if (!(tol > 0.0)) throw std::domain_error("kappa_direct_series: tol must be > 0");

  double c_total = 0.0;
  for (const auto& blk : hd.blocks) c_total += chi_bound(hd.seifert, blk);

  // Per block the modes on each side of zero are unit-spaced, so the tail
  // past |lambda| = L is at most C (L^{-2 sigma} + L^{1-2 sigma}/(2 sigma - 1))
  // per side.
  auto tail_bound = [&](double L) {
    return 2.0 * c_total *
           (std::pow(L, -2.0 * sigma) +
            std::pow(L, 1.0 - 2.0 * sigma) / (2.0 * sigma - 1.0));
  };

  constexpr double kModeBudget = 1e7;
  double cut = 8.0;
  while (tail_bound(cut) > tol) {
    cut *= 2.0;
    if (2.0 * cut * static_cast<double>(hd.blocks.size()) > kModeBudget)
      throw tolerance_error(
          "kappa_direct_series: tolerance unreachable within the mode budget");
  }

  detail::KahanComplex acc;
  acc.add(static_cast<double>(kappa_m_rho(hd)));
  for (const auto& blk : hd.blocks) {
    BlockChi bc = make_block_chi(hd.seifert, blk);
    const double x = to_double(blk.x);
    const bool x_is_zero = blk.x.numerator() == 0;
    const long long n_lo = static_cast<long long>(std::floor(-cut - x));
    const long long n_hi = static_cast<long long>(std::ceil(cut - x));
    for (long long n = n_lo; n <= n_hi; ++n) {
      if (x_is_zero && n == 0) continue;
      const double abs_lambda = std::abs(static_cast<double>(n) + x);
      if (abs_lambda > cut || abs_lambda == 0.0) continue;
      const double chi = static_cast<double>(bc.at(hd.seifert, blk, n));
      if (chi == 0.0) continue;
      acc.add(chi * std::exp(-2.0 * s * std::log(abs_lambda)));
    }
  }
  return {acc.sum(), tail_bound(cut)};
}

HeatValue spectral_heat_trace(const HolonomyData& hd, double t, double tol) {
  require_valid(hd.seifert, hd);
  if (!(t > 0.0)) throw std::domain_error("spectral_heat_trace: t must be > 0");
  if (!(tol > 0.0)) throw std::domain_error("spectral_heat_trace: tol must be > 0");

  double c_total = 0.0;
  for (const auto& blk : hd.blocks) c_total += chi_bound(hd.seifert, blk);

  auto tail_bound = [&](double L) {
    // Unit-spaced modes past L on two sides per block:
    // sum <= e^{-t L^2} + integral_L^inf e^{-t u^2} du, each side.
    double integral = 0.5 * std::sqrt(kPi / t) * std::erfc(L * std::sqrt(t));
    return 2.0 * c_total * (std::exp(-t * L * L) + integral);
  };

  double cut = 4.0;
  while (tail_bound(cut) > tol) cut *= 1.5;

  detail::Kahan acc;
  acc.add(static_cast<double>(kappa_m_rho(hd)));
  for (const auto& blk : hd.blocks) {
    BlockChi bc = make_block_chi(hd.seifert, blk);
    const double x = to_double(blk.x);
    const bool x_is_zero = blk.x.numerator() == 0;
    const long long n_lo = static_cast<long long>(std::floor(-cut - x));
    const long long n_hi = static_cast<long long>(std::ceil(cut - x));
    for (long long n = n_lo; n <= n_hi; ++n) {
      if (x_is_zero && n == 0) continue;
      const double lambda = static_cast<double>(n) + x;
      if (std::abs(lambda) > cut || lambda == 0.0) continue;
      const double chi = static_cast<double>(bc.at(hd.seifert, blk, n));
      if (chi == 0.0) continue;
      acc.add(chi * std::exp(-t * lambda * lambda));
    }
  }
  return {acc.sum(), tail_bound(cut)};
}

}  // namespace crtorsion
