#ifndef SPINFERMION_RATIONAL_HPP
#define SPINFERMION_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace spinfermion {

// Arbitrary precision integers and rationals. Denominators like 26880 and the
// Vandermonde factorials overflow 64-bit intermediates from L = 4 on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

BigInt pow10(int k);
BigInt factorial(const BigInt& n);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" with an optional leading sign.
Rational parse_rational(std::string_view text);

} // namespace spinfermion

#endif
