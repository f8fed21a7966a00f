#include "crtorsion/special_functions.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

namespace crtorsion {

namespace {

using cd = std::complex<double>;

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey's set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    0.49191381609762019978,     -0.33982917917284340971e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// B_{2j}/(2j)! for j = 1..12, the Euler-Maclaurin correction coefficients.
constexpr std::array<double, 12> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    854513.0 / 155112100433309859840000.0,
    -236364091.0 / 1693824136731743669452800000.0,
};

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.real() <= 0.0 && z.imag() == 0.0 && z.real() == std::floor(z.real()))
    throw std::domain_error("log_gamma: pole at non-positive integer");
  if (z.real() < 0.5)
    throw std::domain_error("log_gamma: implemented for Re(z) >= 0.5");
  cd zm1 = z - 1.0;
  cd acc = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k)
    acc += kLanczos[k] / (zm1 + static_cast<double>(k));
  cd t = zm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (zm1 + 0.5) * std::log(t) - t + std::log(acc);
}

std::complex<double> hurwitz_zeta(std::complex<double> s, double a) {
  if (!(a > 0.0) || a > 1.0)
    throw std::domain_error("hurwitz_zeta: a must lie in (0, 1]");
  if (std::abs(s - 1.0) < 1e-12)
    throw pole_error("hurwitz_zeta: simple pole at s = 1", 1.0, 1.0);

  // Shift the argument past max(10, |s|) so the Bernoulli corrections
  // through B_24 reach ~1e-12.
  const double shift_target = std::max(10.0, std::abs(s));
  const long long nshift = static_cast<long long>(std::ceil(shift_target - a)) + 1;

  cd sum = 0.0;
  double comp_re = 0.0, comp_im = 0.0;  // Kahan compensation
  for (long long k = 0; k < nshift; ++k) {
    cd term = std::exp(-s * std::log(static_cast<double>(k) + a));
    double y = term.real() - comp_re;
    double t = sum.real() + y;
    comp_re = (t - sum.real()) - y;
    double yi = term.imag() - comp_im;
    double ti = sum.imag() + yi;
    comp_im = (ti - sum.imag()) - yi;
    sum = cd(t, ti);
  }

  const double w = static_cast<double>(nshift) + a;
  const cd lw = std::log(cd(w, 0.0));
  sum += std::exp((1.0 - s) * lw) / (s - 1.0);
  sum += 0.5 * std::exp(-s * lw);

  // Correction terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * w^{-s-2j+1}.
  cd rising = s;
  cd wpow = std::exp(-(s + 1.0) * lw);
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    sum += kBernoulliOverFactorial[j] * rising * wpow;
    if (j + 1 < kBernoulliOverFactorial.size()) {
      double two_j = 2.0 * static_cast<double>(j + 1);
      rising *= (s + (two_j - 1.0)) * (s + two_j);
      wpow /= w * w;
    }
  }
  return sum;
}

std::complex<double> riemann_zeta(std::complex<double> s) {
  return hurwitz_zeta(s, 1.0);
}

std::complex<double> pair_zeta(std::complex<double> s, double x) {
  if (!(x > 0.0) || x > 1.0)
    throw std::domain_error("pair_zeta: x must lie in (0, 1)");
  if (std::abs(s - 1.0) < 1e-12)
    throw pole_error("pair_zeta: simple pole at s = 1", 1.0, 2.0);
  if (x == 1.0) return 2.0 * hurwitz_zeta(s, 1.0);
  return hurwitz_zeta(s, x) + hurwitz_zeta(s, 1.0 - x);
}

double pair_zeta_deriv0(double x) {
  if (!(x > 0.0) || !(x < 1.0))
    throw std::domain_error("pair_zeta_deriv0: x must lie in (0, 1)");
  return -std::log(2.0 * std::sin(kPi * x));
}

MeroValue f_factor(std::complex<double> s) {
  if (s.real() >= 0.5)
    return MeroValue::finite(std::exp(log_gamma(s)) * std::cos(kPi * s / 2.0));

  // Reflected form f(s) = pi / (2 sin(pi s/2) Gamma(1-s)). The removable
  // singularities of Gamma(s) cos(pi s/2) at negative odd integers are
  // already cancelled here; the genuine poles sit at the zeros of
  // sin(pi s/2), i.e. s = 0, -2, -4, ...
  const double nearest_even = 2.0 * std::round(s.real() / 2.0);
  if (nearest_even <= 0.0 && std::abs(s - nearest_even) < 1e-9) {
    const long long m = static_cast<long long>(-nearest_even) / 2;
    double residue = (m % 2 == 0) ? 1.0 : -1.0;
    for (long long k = 1; k <= 2 * m; ++k) residue /= static_cast<double>(k);
    return MeroValue::pole(nearest_even, residue);
  }
  cd denom = 2.0 * std::sin(kPi * s / 2.0) * std::exp(log_gamma(1.0 - s));
  return MeroValue::finite(kPi / denom);
}

}  // namespace crtorsion
