#include "crosslab/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace crosslab {

Int floor_int(const Rational& r) {
  Int q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}

Int ceil_int(const Rational& r) {
  Int q = num(r) / den(r);
  if (num(r) > 0 && q * den(r) != num(r)) ++q;
  return q;
}

Int integers_strictly_between(const Rational& a, const Rational& b) {
  const Rational lo = a < b ? a : b;
  const Rational hi = a < b ? b : a;
  if (lo == hi) return 0;
  // smallest integer > lo and largest integer < hi
  Int first = floor_int(lo) + 1;
  Int last = ceil_int(hi) - 1;
  Int count = last - first + 1;
  return count > 0 ? count : Int(0);
}

std::string format_rational(const Rational& r) {
  return num(r).str() + "/" + den(r).str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int p(text.substr(0, slash));
    Int q(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator in rational literal: " + text);
    if (q < 0) { p = -p; q = -q; }  // the bignum backend insists on q > 0
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

Rational rational_from_double(double value, std::uint64_t max_den) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  const bool neg = value < 0;
  double x = std::fabs(value);
  // Continued-fraction convergents p/q; stop before q exceeds max_den.
  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = x;
  for (int it = 0; it < 64; ++it) {
    const double a_floor = std::floor(frac);
    if (a_floor > 9e18) break;
    Int a(static_cast<long long>(a_floor));
    Int p2 = a * p1 + p0;
    Int q2 = a * q1 + q0;
    if (q2 > Int(max_den)) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const double rem = frac - a_floor;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rational(0);
  Rational r(p1, q1);
  return neg ? -r : r;
}

} // namespace crosslab
