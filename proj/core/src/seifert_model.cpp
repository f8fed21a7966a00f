#include "crtorsion/seifert_model.hpp"

#include <cmath>
#include <numeric>

#include "crtorsion/errors.hpp"
#include "crtorsion/special_functions.hpp"

namespace crtorsion {

std::vector<std::string> validate(const SeifertData& sd, const HolonomyData& hd) {
  std::vector<std::string> out;
  if (sd.genus < 0) out.push_back("genus must be non-negative");
  for (std::size_t i = 0; i < sd.fibers.size(); ++i) {
    const Fiber& f = sd.fibers[i];
    if (f.alpha < 2)
      out.push_back("alpha < 2 at fiber " + std::to_string(i));
    else if (std::gcd(f.alpha, std::llabs(f.beta)) != 1)
      out.push_back("gcd(alpha,beta) != 1 at fiber " + std::to_string(i));
  }

  long long dim_total = 0;
  long long zero_blocks = 0;
  for (std::size_t bi = 0; bi < hd.blocks.size(); ++bi) {
    const HolonomyBlock& blk = hd.blocks[bi];
    const std::string tag = "block " + std::to_string(bi);
    if (blk.dim < 1) out.push_back(tag + ": dim must be positive");
    dim_total += blk.dim;
    if (blk.x < Rational(0) || blk.x >= Rational(1))
      out.push_back(tag + ": x must lie in [0,1)");
    if (blk.x.numerator() == 0) ++zero_blocks;
    for (std::size_t bj = bi + 1; bj < hd.blocks.size(); ++bj)
      if (hd.blocks[bj].x == blk.x)
        out.push_back(tag + ": duplicate exponent x with block " + std::to_string(bj));
    if (blk.fiber_spectra.size() != sd.fibers.size()) {
      out.push_back(tag + ": fiber_spectra must have one entry per fiber");
      continue;
    }
    for (std::size_t i = 0; i < blk.fiber_spectra.size(); ++i) {
      const auto& spec = blk.fiber_spectra[i];
      const std::string ftag = tag + ", fiber " + std::to_string(i);
      if (static_cast<long long>(spec.size()) != blk.dim) {
        out.push_back(ftag + ": spectrum size must equal block dim");
        continue;
      }
      for (std::size_t j = 0; j < spec.size(); ++j) {
        const Rational& xij = spec[j];
        if (xij < Rational(0) || xij >= Rational(1)) {
          out.push_back(ftag + ": exponent " + std::to_string(j) + " outside [0,1)");
          continue;
        }
        Rational k = xij * Rational(sd.fibers[i].alpha) - blk.x;
        if (!is_integer(k))
          out.push_back(ftag + ": alpha*x_ij - x not an integer at entry " +
                        std::to_string(j));
        else if (blk.x.numerator() != 0 && xij.numerator() == 0)
          out.push_back(ftag + ": x_ij = 0 impossible for block with x != 0");
      }
    }
  }
  if (dim_total < 1) out.push_back("total representation dimension must be >= 1");
  if (zero_blocks > 1) out.push_back("at most one block may have x = 0");
  return out;
}

void require_valid(const SeifertData& sd, const HolonomyData& hd) {
  auto violations = validate(sd, hd);
  if (!violations.empty()) throw validation_error(violations.front());
}

OrbifoldInvariants orbifold_invariants(const SeifertData& sd) {
  OrbifoldInvariants inv;
  inv.chi_star = Rational(2 - 2 * sd.genus - static_cast<long long>(sd.fibers.size()));
  inv.chi_orb = inv.chi_star;
  inv.d_l = Rational(sd.b);
  for (const Fiber& f : sd.fibers) {
    inv.chi_orb += Rational(1, f.alpha);
    inv.d_l += Rational(f.beta, f.alpha);
  }
  return inv;
}

long long total_dim(const HolonomyData& hd) {
  long long d = 0;
  for (const auto& blk : hd.blocks) d += blk.dim;
  return d;
}

const HolonomyBlock* zero_block(const HolonomyData& hd) {
  for (const auto& blk : hd.blocks)
    if (blk.x.numerator() == 0) return &blk;
  return nullptr;
}

long long dim_v0i(const HolonomyData& hd, std::size_t fiber) {
  const HolonomyBlock* z = zero_block(hd);
  if (z == nullptr || fiber >= z->fiber_spectra.size()) return 0;
  long long count = 0;
  for (const Rational& xij : z->fiber_spectra[fiber])
    if (xij.numerator() == 0) ++count;
  return count;
}

long long kappa_m_rho(const HolonomyData& hd) {
  const HolonomyBlock* z = zero_block(hd);
  if (z == nullptr) return 0;
  OrbifoldInvariants inv = orbifold_invariants(hd.seifert);
  long long result = z->dim * inv.chi_star.numerator();  // chi_star is integral
  for (std::size_t i = 0; i < hd.seifert.fibers.size(); ++i)
    result += dim_v0i(hd, i);
  return result;
}

double cos_two_pi(const Rational& r, long long n) {
  Rational angle = fractional_part(r * Rational(n));
  return std::cos(2.0 * kPi * to_double(angle));
}

double real_trace_generic(const HolonomyData& hd, long long n) {
  double acc = 0.0;
  for (const auto& blk : hd.blocks)
    acc += static_cast<double>(blk.dim) * cos_two_pi(blk.x, n);
  return acc;
}

double real_trace_exceptional(const HolonomyData& hd, std::size_t fiber, long long n) {
  double acc = 0.0;
  for (const auto& blk : hd.blocks) {
    if (fiber >= blk.fiber_spectra.size()) continue;
    for (const Rational& xij : blk.fiber_spectra[fiber]) acc += cos_two_pi(xij, n);
  }
  return acc;
}

}  // namespace crtorsion
