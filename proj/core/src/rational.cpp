#include "crtorsion/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace crtorsion {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = text.find('/');
  auto parse_ll = [&](const std::string& part) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational literal '" + text + "'");
    }
    if (pos != part.size())
      throw std::invalid_argument("bad rational literal '" + text + "'");
    return v;
  };
  if (slash == std::string::npos) return Rational(parse_ll(text));
  long long num = parse_ll(text.substr(0, slash));
  long long den = parse_ll(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

long long floor_rational(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

Rational fractional_part(const Rational& r) {
  return r - Rational(floor_rational(r));
}

}  // namespace crtorsion
