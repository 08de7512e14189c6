#include <composita/series.hpp>

#include <composita/error.hpp>

#include <algorithm>
#include <utility>

namespace composita {

namespace {
const Rational kZero{0};
}

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw gf_error(errc::invalid_parameter, "series order must be >= 0");
  coeff_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients) : coeff_(std::move(coefficients)) {
  if (coeff_.empty()) throw gf_error(errc::invalid_parameter, "series needs at least the x^0 coefficient");
}

const Rational& TruncatedSeries::coefficient(int n) const {
  if (n < 0 || n > order()) return kZero;
  return coeff_[static_cast<std::size_t>(n)];
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(), [](const Rational& c) { return c == 0; });
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order < 0 || new_order > order())
    throw gf_error(errc::invalid_parameter, "truncation order outside 0..order");
  return TruncatedSeries(
      std::vector<Rational>(coeff_.begin(), coeff_.begin() + new_order + 1));
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int common = std::min(a.order(), b.order());
  for (int n = 0; n <= common; ++n)
    if (a[n] != b[n]) return false;
  return true;
}

// ---- arithmetic ----

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) c[static_cast<std::size_t>(n)] = a[n] + b[n];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) c[static_cast<std::size_t>(n)] = a[n] - b[n];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries negate(const TruncatedSeries& a) {
  std::vector<Rational> c(a.coefficients());
  for (auto& v : c) v = -v;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const TruncatedSeries& a, const Rational& c) {
  std::vector<Rational> r(a.coefficients());
  for (auto& v : r) v *= c;
  return TruncatedSeries(std::move(r));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b[j] == 0) continue;
      c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries pow(const TruncatedSeries& a, const Integer& k) {
  if (k < 0) throw gf_error(errc::invalid_parameter, "series power with negative exponent");
  TruncatedSeries result = constant_series(1, a.order());
  TruncatedSeries square = a;
  Integer e = k;
  while (e > 0) {
    if (bit_test(e, 0)) result = mul(result, square);
    e >>= 1;
    if (e > 0) square = mul(square, square);
  }
  return result;
}

TruncatedSeries shift_up(const TruncatedSeries& a) {
  std::vector<Rational> c(a.coefficients().size(), Rational(0));
  for (int n = 1; n <= a.order(); ++n) c[static_cast<std::size_t>(n)] = a[n - 1];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries reciprocal_series(const TruncatedSeries& b) {
  if (b[0] == 0)
    throw gf_error(errc::zero_constant_term, "reciprocal of a series with zero constant term");
  const int order = b.order();
  std::vector<Rational> a(static_cast<std::size_t>(order) + 1);
  const Rational inv_b0 = 1 / b[0];
  a[0] = inv_b0;
  for (int n = 1; n <= order; ++n) {
    Rational s = 0;
    for (int i = 1; i <= n; ++i) s += b[i] * a[static_cast<std::size_t>(n - i)];
    a[static_cast<std::size_t>(n)] = -inv_b0 * s;
  }
  return TruncatedSeries(std::move(a));
}

TruncatedSeries compose_series(const TruncatedSeries& r, const TruncatedSeries& f) {
  if (f[0] != 0)
    throw gf_error(errc::nonzero_inner_constant, "composition with nonzero inner constant term");
  const int order = std::min(r.order(), f.order());
  const TruncatedSeries inner = f.order() == order ? f : f.truncated(order);
  // terms r(k) f^k with k > order vanish below x^(order+1) because f has
  // valuation >= 1, so Horner can start at k = order
  const int top = order;
  TruncatedSeries acc = constant_series(r[top], order);
  for (int k = top - 1; k >= 0; --k) {
    acc = mul(acc, inner);
    acc = add(acc, constant_series(r[k], order));
  }
  return acc;
}

TruncatedSeries reversion_series_newton(const TruncatedSeries& f) {
  if (f[0] != 0)
    throw gf_error(errc::nonzero_constant, "reversion of a series with nonzero constant term");
  if (f.order() < 1 || f[1] == 0)
    throw gf_error(errc::zero_linear_term, "reversion of a series with zero linear term");
  const int order = f.order();
  std::vector<Rational> a(static_cast<std::size_t>(order) + 1, Rational(0));
  const Rational inv_f1 = 1 / f[1];
  a[1] = inv_f1;
  for (int n = 2; n <= order; ++n) {
    // with a(n) still 0, [x^n] f(a) misses only the f(1) a(n) contribution
    const TruncatedSeries partial = compose_series(f, TruncatedSeries(a));
    a[static_cast<std::size_t>(n)] = -partial[n] * inv_f1;
  }
  return TruncatedSeries(std::move(a));
}

// ---- stock series ----

namespace {
std::vector<Rational> zeros(int order) {
  if (order < 0) throw gf_error(errc::invalid_parameter, "series order must be >= 0");
  return std::vector<Rational>(static_cast<std::size_t>(order) + 1, Rational(0));
}
}  // namespace

TruncatedSeries zero_series(int order) { return TruncatedSeries(order); }

TruncatedSeries constant_series(const Rational& c, int order) {
  auto v = zeros(order);
  v[0] = c;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries x_series(int order) { return monomial_series(1, 1, order); }

TruncatedSeries monomial_series(int degree, const Rational& c, int order) {
  if (degree < 0) throw gf_error(errc::invalid_parameter, "monomial with negative degree");
  auto v = zeros(order);
  if (degree <= order) v[static_cast<std::size_t>(degree)] = c;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries geometric_series(int order) {
  auto v = zeros(order);
  for (auto& c : v) c = 1;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries log1p_series(int order) {
  auto v = zeros(order);
  for (int n = 1; n <= order; ++n)
    v[static_cast<std::size_t>(n)] = make_rational(n % 2 == 1 ? 1 : -1, n);
  return TruncatedSeries(std::move(v));
}

TruncatedSeries expm1_series(int order) {
  auto v = zeros(order);
  Integer fact = 1;
  for (int n = 1; n <= order; ++n) {
    fact *= n;
    v[static_cast<std::size_t>(n)] = make_rational(1, fact);
  }
  return TruncatedSeries(std::move(v));
}

}  // namespace composita
