#pragma once

#include <composita/rational.hpp>

#include <vector>

namespace composita {

// Power series truncated at a fixed order: coefficients of x^0 .. x^order
// are known exactly, everything above is unknown (not assumed zero).
// Immutable after construction.
class TruncatedSeries {
 public:
  // Zero series of the given order (order >= 0).
  explicit TruncatedSeries(int order);

  // order = coefficients.size() - 1; the vector must not be empty.
  explicit TruncatedSeries(std::vector<Rational> coefficients);

  int order() const noexcept { return static_cast<int>(coeff_.size()) - 1; }

  // Stored coefficient; n must be within 0..order.
  const Rational& operator[](int n) const { return coeff_.at(static_cast<std::size_t>(n)); }

  // 0 outside the stored range (convenience for convolution loops).
  const Rational& coefficient(int n) const;

  const std::vector<Rational>& coefficients() const noexcept { return coeff_; }

  bool has_zero_constant_term() const { return coeff_[0] == 0; }
  bool is_zero() const;

  // Copy truncated to a lower (or equal) order.
  TruncatedSeries truncated(int new_order) const;

  // Equality compares coefficients through the smaller of the two orders;
  // a series is never distinguished from its own further truncation.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::vector<Rational> coeff_;
};

// ---- arithmetic (result order = min of operand orders) ----

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scale(const TruncatedSeries& a, const Rational& c);

// Cauchy product: c(n) = sum_{i=0..n} a(i) b(n-i).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// a^k by binary exponentiation, k >= 0.  k == 0 gives the constant 1.
TruncatedSeries pow(const TruncatedSeries& a, const Integer& k);

// x * a(x); the result keeps a's order (the top coefficient drops off).
TruncatedSeries shift_up(const TruncatedSeries& a);

// 1/b(x).  Requires b(0) != 0 (zero_constant_term).
// Recurrence: a(0) = 1/b(0), a(n) = -(1/b(0)) sum_{i=1..n} b(i) a(n-i).
TruncatedSeries reciprocal_series(const TruncatedSeries& b);

// r(f(x)) by Horner's scheme.  Requires f(0) == 0 (nonzero_inner_constant).
// Result order = min(r.order, f.order).
TruncatedSeries compose_series(const TruncatedSeries& r, const TruncatedSeries& f);

// Compositional inverse a with f(a(x)) = x, solved order by order:
// a(n) is fixed so that [x^n] f(a) matches [x^n] x.  Requires f(0) == 0
// (nonzero_constant) and f(1) != 0 (zero_linear_term).
// This is the plain definitional solver; it is deliberately independent of
// the triangle-based reversion in transforms.hpp so the two can check each
// other.
TruncatedSeries reversion_series_newton(const TruncatedSeries& f);

// ---- stock series ----

TruncatedSeries zero_series(int order);
TruncatedSeries constant_series(const Rational& c, int order);
TruncatedSeries x_series(int order);                               // x
TruncatedSeries monomial_series(int degree, const Rational& c, int order);
TruncatedSeries geometric_series(int order);                       // 1/(1-x)
TruncatedSeries log1p_series(int order);                           // ln(1+x)
TruncatedSeries expm1_series(int order);                           // e^x - 1

// operator sugar over the named functions above
inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

}  // namespace composita
