#pragma once

#include <boost/rational.hpp>

#include <string>

namespace crtorsion {

/// Exact rational arithmetic for holonomy exponents and orbifold data.
/// Branch decisions (x == 0, congruences mod alpha) must never go through
/// floating point.
using Rational = boost::rational<long long>;

/// Parses "p/q" or "p". q must be positive after normalization.
Rational parse_rational(const std::string& text);

/// Formats as "p/q" with q > 0 and gcd(p,q) = 1, or "p" when integral.
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

bool is_integer(const Rational& r);

long long floor_rational(const Rational& r);

/// r - floor(r), in [0, 1).
Rational fractional_part(const Rational& r);

}  // namespace crtorsion
