#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace composita {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact rational p/q in canonical form (gcd 1, positive denominator).
// Throws gf_error(invalid_parameter) when q == 0.  This is the one safe way
// to build a rational from a numerator/denominator pair: the boost
// two-argument constructor aborts on a negative denominator.
Rational make_rational(Integer numerator, Integer denominator);

// Parses "p" or "p/q" with optional leading '-'.  Whitespace is not allowed.
Rational rational_from_string(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.  Inverse of
// rational_from_string for every value.
std::string to_string(const Rational& value);

// base^exponent with an integer exponent of either sign.  A negative
// exponent requires base != 0 (invalid_parameter otherwise).  0^0 = 1.
Rational rational_pow(const Rational& base, const Integer& exponent);

// n! as an exact integer; n must be >= 0.
Integer factorial(int n);

}  // namespace composita
