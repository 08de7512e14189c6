#include <composita/rational.hpp>

#include <composita/error.hpp>

namespace composita {

Rational make_rational(Integer numerator, Integer denominator) {
  if (denominator == 0)
    throw gf_error(errc::invalid_parameter, "rational with zero denominator");
  // Division of two canonical rationals normalizes sign and gcd; the
  // two-argument cpp_rational constructor must not see a negative
  // denominator, so it is avoided entirely.
  return Rational(std::move(numerator)) / Rational(std::move(denominator));
}

Rational rational_from_string(std::string_view text) {
  const auto bad = [&] {
    return gf_error(errc::invalid_parameter,
                    "not a rational literal: \"" + std::string(text) + "\"");
  };
  if (text.empty()) throw bad();

  const auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };

  bool neg = false;
  std::string_view rest = text;
  if (rest.front() == '-') {
    neg = true;
    rest.remove_prefix(1);
  }
  std::string_view num = rest, den = "1";
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
  }
  if (!is_digits(num) || !is_digits(den)) throw bad();

  Integer p{std::string(num)}, q{std::string(den)};
  if (neg) p = -p;
  return make_rational(std::move(p), std::move(q));
}

std::string to_string(const Rational& value) {
  std::string s = numerator(value).str();
  if (denominator(value) != 1) {
    s += '/';
    s += denominator(value).str();
  }
  return s;
}

Rational rational_pow(const Rational& base, const Integer& exponent) {
  if (exponent < 0) {
    if (base == 0)
      throw gf_error(errc::invalid_parameter, "0 raised to a negative power");
    return rational_pow(1 / base, -exponent);
  }
  Rational result = 1;
  Rational square = base;
  Integer k = exponent;
  while (k > 0) {
    if (bit_test(k, 0)) result *= square;
    k >>= 1;
    if (k > 0) square *= square;
  }
  return result;
}

Integer factorial(int n) {
  if (n < 0) throw gf_error(errc::invalid_parameter, "factorial of a negative number");
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace composita
