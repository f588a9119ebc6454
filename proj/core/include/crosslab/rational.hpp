#ifndef CROSSLAB_RATIONAL_HPP
#define CROSSLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crosslab {

// Exact scalar type used throughout the geometric pipeline.  All drawing
// coordinates, turn fractions and intermediate predicates are rational; no
// geometric decision in the library depends on floating point (the spherical
// sampler is the single, explicitly documented exception).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }
inline int sign(const Int& v) { return v.sign(); }

// Largest integer <= r.
Int floor_int(const Rational& r);
// Smallest integer >= r.
Int ceil_int(const Rational& r);
// Number of integers m with lo < m < hi (endpoints excluded); order-free.
Int integers_strictly_between(const Rational& a, const Rational& b);

// Canonical text form "p/q" with q > 0 and gcd(p, q) == 1, e.g. "-3/2", "0/1".
std::string format_rational(const Rational& r);

// Accepts "p/q" or a bare integer "p"; normalizes sign and reduces.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Best rational approximation with denominator <= max_den (continued
// fractions).  Used only when turning float-designed sample points into exact
// coordinates; all later reasoning about those points is exact.
Rational rational_from_double(double value, std::uint64_t max_den = (1ull << 24));

} // namespace crosslab

#endif
