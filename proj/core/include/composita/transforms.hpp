#pragma once

#include <composita/composita.hpp>
#include <composita/rational.hpp>
#include <composita/series.hpp>

#include <memory>
#include <vector>

namespace composita {

struct GFExpression;

// Rectangular table of [x^k] r(x)^m for 0 <= k <= max_order and
// 0 <= m <= max_power, for a series r with arbitrary constant term.
// Row m of the table always equals pow(r, m); that identity is the
// construction, not an afterthought.
class PowerCoefficientTable {
 public:
  // Coefficients of r beyond r.order count as zero, so any max_order is
  // accepted; r = 1 gives R(k,m) = delta(k,0) for every m.
  PowerCoefficientTable(const TruncatedSeries& r, int max_order, int max_power);

  int max_order() const noexcept { return max_order_; }
  int max_power() const noexcept { return max_power_; }

  // [x^k] r^m; both indices bounds-checked (row_out_of_range).
  const Rational& coefficient(int k, int m) const;

 private:
  int max_order_;
  int max_power_;
  std::vector<Rational> table_;  // (max_order+1) x (max_power+1), power-major
};

// Square table with max_order = max_power = size.
PowerCoefficientTable power_table(const TruncatedSeries& r, int size);

// a = r(f(x)) from the composita of f:
// a(0) = r(0), a(n) = sum_{k=1..n} F(n, k) r(k).
// Requires r.order >= tf.max_row (shape_mismatch); result order = tf.max_row.
TruncatedSeries compose_coefficients(const CompositaTriangle& tf, const TruncatedSeries& r);

// Composita of A(x) = x * R(F(x)) where r(0) != 0 (zero_r0 otherwise):
//   A(n, n) = r(0)^n
//   A(n, m) = sum_{k=1..n-m} F(n-m, k) [x^k] R^m        for m < n.
// rows defaults (rows == 0) to the largest the inputs support:
// min(rt.max_power, rt.max_order + 1, tf.max_row + 1).
CompositaTriangle composita_x_R_of_F(const PowerCoefficientTable& rt,
                                     const CompositaTriangle& tf, int rows = 0);

// Composita of A(x) = x / B(x) from the composita of x*B(x), where
// b0 = B(0) = source entry (1,1) must be nonzero (zero_leading_entry):
//   A(n, n) = (1/b0)^n
//   A(n, m) = (1/b0)^m sum_{k=1..n-m} C(m+k-1, m-1)
//                 sum_{j=1..k} (-1)^j (1/b0)^j C(k, j) B(n-m+j, j).
// Needs source rows >= 2*(rows-1) (insufficient_rows); rows == 0 picks
// the largest supported, source.max_row/2 + 1.
CompositaTriangle reciprocal_composita(const CompositaTriangle& txb, int rows = 0);

// Composita of the solution A of A(x) = x*H(A(x)) from the composita of
// G(x) = x*H(x) via Lagrange inversion, entrywise:
//   A(n, k) = (k/n) G(2n-k, n).
// Needs source rows >= 2*rows - 1 (insufficient_rows); rows == 0 picks
// the largest supported, (source.max_row + 1)/2.
CompositaTriangle lagrange_composita(const CompositaTriangle& tg, int rows = 0);

// Composita of the compositional inverse A of F (F(A(x)) = x) from the
// composita of F, where f1 = F(1,1) != 0 (zero_linear_term):
//   A(n, n) = (1/f1)^n
//   A(n, m) = (m/(n*f1^n)) sum_{k=1..n-m} C(n+k-1, n-1)
//                 sum_{j=1..k} (-1)^j (1/f1)^j C(k, j) F(n-m+j, j).
// Needs source rows >= 2*(rows-1); rows == 0 picks source.max_row/2 + 1.
CompositaTriangle reversion_composita(const CompositaTriangle& tf, int rows = 0);

// Coefficients of the compositional inverse, first column of the above
// specialized to f1 == 1 (anything else is linear_term_not_one; rescale
// the input first if needed):
//   a(1) = 1,
//   a(n) = (1/n) sum_{k=1..n-1} C(n+k-1, n-1)
//              sum_{j=1..k} (-1)^j C(k, j) F(n+j-1, j).
// order == 0 picks the largest supported, source.max_row/2 + 1.
TruncatedSeries reverse_coefficients(const CompositaTriangle& tf, int order = 0);

// Solves F(A(x)) = G(x) for A to the given order: builds the composita of
// F, reverses it, and composes the reverse with G's composita, so
// A = revF(G) arrives purely through triangle transforms.  The result is
// substituted back into F before returning; a mismatch with G raises
// residual_nonzero (that would be an internal inconsistency, not bad
// input).  Requires f(0) = 0 (nonzero_constant), g(0) = 0
// (nonzero_constant_term) and f(1) != 0 (zero_linear_term).
TruncatedSeries solve_functional(const GFExpression& f_expr, const GFExpression& g_expr,
                                 int order);

}  // namespace composita
