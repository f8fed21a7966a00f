#pragma once

#include <string>
#include <vector>

#include "crtorsion/rational.hpp"

namespace crtorsion {

/// One exceptional fiber (alpha, beta), alpha >= 2, gcd(alpha, beta) = 1.
struct Fiber {
  long long alpha = 0;
  long long beta = 0;
};

/// Integral Seifert invariants of the circle bundle: base genus g, integer
/// degree part b and the exceptional fiber exponents.
struct SeifertData {
  long long genus = 0;
  long long b = 0;
  std::vector<Fiber> fibers;
};

/// One irreducible holonomy block: the generic-orbit phase exponent
/// x in [0,1) (rho(f) = e^{2 i pi x} Id on this block), the block dimension,
/// and per exceptional fiber the multiset of phase exponents of rho(f_i).
/// alpha_i * x_{i,j} - x must be an integer for every entry.
struct HolonomyBlock {
  Rational x;
  long long dim = 0;
  std::vector<std::vector<Rational>> fiber_spectra;  // [fiber][j], j < dim
};

/// Holonomy data for a unitary representation split into blocks with
/// pairwise distinct x, decorating a SeifertData.
struct HolonomyData {
  SeifertData seifert;
  std::vector<HolonomyBlock> blocks;
};

struct OrbifoldInvariants {
  Rational chi_star;  // 2 - 2g - #fibers, Euler characteristic of the punctured base
  Rational chi_orb;   // chi_star + sum 1/alpha_i, rational Euler class of the orbifold
  Rational d_l;       // b + sum beta_i/alpha_i, rational degree of the bundle
};

/// Checks every structural invariant of the pair. Returns one description
/// per violation (empty means valid). Violations are data, not errors.
std::vector<std::string> validate(const SeifertData& sd, const HolonomyData& hd);

/// Runs validate and throws validation_error on the first violation.
void require_valid(const SeifertData& sd, const HolonomyData& hd);

OrbifoldInvariants orbifold_invariants(const SeifertData& sd);

long long total_dim(const HolonomyData& hd);

/// Pointer to the x = 0 block, or nullptr if the representation has none.
const HolonomyBlock* zero_block(const HolonomyData& hd);

/// dim V^{0,i}: number of j with x_{i,j} = 0. Nonzero entries can only
/// occur in the x = 0 block, so this scans that block only.
long long dim_v0i(const HolonomyData& hd, std::size_t fiber);

/// kappa(M, rho) = dim(V^0) chi(Sigma*) + sum_i dim(V^{0,i}).
long long kappa_m_rho(const HolonomyData& hd);

/// Real part of tr rho(f^n) = sum over blocks of dim * cos(2 pi n x).
double real_trace_generic(const HolonomyData& hd, long long n);

/// Real part of tr rho(f_i^n) = sum over blocks and j of cos(2 pi n x_{i,j}).
double real_trace_exceptional(const HolonomyData& hd, std::size_t fiber, long long n);

/// cos(2 pi n r) with the angle reduced mod 1 in exact arithmetic first.
double cos_two_pi(const Rational& r, long long n);

}  // namespace crtorsion
