#pragma once

#include <composita/rational.hpp>
#include <composita/series.hpp>

#include <vector>

namespace composita {

// Triangle of the coefficients T(n, k) = [x^n] f(x)^k for a series f with
// f(0) = 0, stored for 1 <= k <= n <= max_row.  Row n lists k = 1..n.
// Immutable after construction.
class CompositaTriangle {
 public:
  // entries holds rows 1..max_row concatenated: (1,1), (2,1), (2,2), ...
  // Its size must be max_row*(max_row+1)/2.
  CompositaTriangle(int max_row, std::vector<Rational> entries);

  int max_row() const noexcept { return max_row_; }

  // T(n, k) with the conventions of the zeroth power: entry(n, 0) is
  // 1 at n == 0 and 0 otherwise, and entries left of the triangle
  // (k < 0) or right of the diagonal (k > n) are 0.  Rows above
  // max_row are unknown and throw row_out_of_range.
  const Rational& entry(int n, int k) const;

  // Column k as a series of order max_row: coefficient(n) = entry(n, k).
  TruncatedSeries column(int k) const;

  // Equality requires identical shape and identical entries.
  friend bool operator==(const CompositaTriangle& a, const CompositaTriangle& b);

 private:
  int max_row_;
  std::vector<Rational> entries_;
};

// ---- construction ----

// Definitional construction: T(n, k) = sum over all compositions of n into
// k ordered positive parts p1..pk of f(p1)*...*f(pk).  Exponential in n and
// capped at rows <= 12 (invalid_parameter above that); this is the oracle
// the fast constructions are checked against.
// Requires f(0) == 0 (nonzero_constant_term) and rows <= f.order
// (insufficient_rows).
CompositaTriangle composita_by_compositions(const TruncatedSeries& f, int rows);

// Production construction via the convolution recurrence
// T(n, k) = sum_{i=1..n-k+1} f(i) T(n-i, k-1), T(n, 1) = f(n).
// Same preconditions as above, without the row cap.
CompositaTriangle composita_by_powers(const TruncatedSeries& f, int rows);

// Column k of the triangle as a series (k in 1..max_row, else
// row_out_of_range).  column(1) recovers f itself.
TruncatedSeries series_from_composita(const CompositaTriangle& t, int k);

// ---- closed forms ----

enum class ClosedFormKind {
  linear_quadratic,  // a*x + b*x^2
  rational_linear,   // b*x / (1 + a*x)
  log_shift,         // ln(1 + x)
  exp_shift,         // e^x - 1
  geometric,         // x / (1 - x)
};

// One of five series families whose composita have closed forms.  The a, b
// parameters apply to the first two kinds and are ignored by the rest.
struct ClosedFormFamily {
  ClosedFormKind kind;
  Rational a{1};
  Rational b{1};

  TruncatedSeries series(int order) const;
  const char* name() const;
};

// Evaluates the family's closed form per entry:
//   a*x + b*x^2      -> C(k, n-k) a^(2k-n) b^(n-k)          (needs a != 0)
//   b*x/(1 + a*x)    -> (-1)^(n+k) C(n-1, k-1) a^(n-k) b^k
//   ln(1 + x)        -> (k!/n!) * signed Stirling-1 s(n, k)
//   e^x - 1          -> (k!/n!) * Stirling-2 {n, k}
//   x/(1 - x)        -> C(n-1, k-1)
CompositaTriangle closed_form_composita(const ClosedFormFamily& family, int rows);

// ---- algebra on triangles ----

// Composita of c*f from the composita of f: entry(n, k) scaled by c^k.
CompositaTriangle composita_scale(const CompositaTriangle& t, const Rational& c);

// Composita of f+g from the compositae of f and g:
// entry(n, k) = sum_{l=0..k} C(k, l) sum_{i=0..n} F(i, l) G(n-i, k-l),
// using the zeroth-power convention at l = 0 and l = k.
// Shapes must match (shape_mismatch).
CompositaTriangle composita_sum(const CompositaTriangle& tf, const CompositaTriangle& tg);

// Composita of f*b for a series b (b(0) may be anything):
// entry(n, k) = sum_{i=k..n} F(i, k) [x^(n-i)] b^k.
// Requires b.order >= max_row - 1 (shape_mismatch).
CompositaTriangle composita_product_with_series(const CompositaTriangle& tf,
                                                const TruncatedSeries& b);

}  // namespace composita
