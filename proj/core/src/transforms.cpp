#include <composita/transforms.hpp>

#include <composita/error.hpp>
#include <composita/evaluate.hpp>
#include <composita/special_numbers.hpp>

#include <algorithm>
#include <utility>

namespace composita {

namespace {

std::size_t triangle_size(int rows) {
  return static_cast<std::size_t>(rows) * (static_cast<std::size_t>(rows) + 1) / 2;
}

std::size_t entry_index(int n, int k) {
  return static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n) / 2 +
         static_cast<std::size_t>(k - 1);
}

// shared by the reciprocal/reversion/lagrange transforms: translate a
// requested output size against what the source triangle can support
int resolve_rows(int requested, int supported, const char* what) {
  if (requested == 0) return supported;
  if (requested < 1) throw gf_error(errc::invalid_parameter, "triangle needs at least one row");
  if (requested > supported)
    throw gf_error(errc::insufficient_rows,
                   std::string(what) + " supports only " + std::to_string(supported) +
                       " rows, not " + std::to_string(requested));
  return requested;
}

}  // namespace

// ---- power table ----

PowerCoefficientTable::PowerCoefficientTable(const TruncatedSeries& r, int max_order,
                                             int max_power)
    : max_order_(max_order), max_power_(max_power) {
  if (max_order < 0 || max_power < 0)
    throw gf_error(errc::invalid_parameter, "table extents must be >= 0");

  table_.reserve((static_cast<std::size_t>(max_order) + 1) *
                 (static_cast<std::size_t>(max_power) + 1));
  // coefficients of r beyond its stored order count as zero
  std::vector<Rational> padded(static_cast<std::size_t>(max_order) + 1, Rational(0));
  for (int k = 0; k <= max_order; ++k) padded[k] = r.coefficient(k);
  const TruncatedSeries rt(std::move(padded));
  TruncatedSeries rm = constant_series(1, max_order);
  for (int m = 0; m <= max_power; ++m) {
    for (int k = 0; k <= max_order; ++k) table_.push_back(rm[k]);
    if (m < max_power) rm = mul(rm, rt);
  }
}

const Rational& PowerCoefficientTable::coefficient(int k, int m) const {
  if (k < 0 || k > max_order_ || m < 0 || m > max_power_)
    throw gf_error(errc::row_out_of_range,
                   "power table has no entry (" + std::to_string(k) + ", " + std::to_string(m) + ")");
  return table_[static_cast<std::size_t>(m) * (static_cast<std::size_t>(max_order_) + 1) +
                static_cast<std::size_t>(k)];
}

PowerCoefficientTable power_table(const TruncatedSeries& r, int size) {
  return PowerCoefficientTable(r, size, size);
}

// ---- composition via triangle ----

TruncatedSeries compose_coefficients(const CompositaTriangle& tf, const TruncatedSeries& r) {
  const int order = tf.max_row();
  if (r.order() < order)
    throw gf_error(errc::shape_mismatch,
                   "outer series needs order >= " + std::to_string(order));
  std::vector<Rational> a(static_cast<std::size_t>(order) + 1, Rational(0));
  a[0] = r[0];
  for (int n = 1; n <= order; ++n) {
    Rational s = 0;
    for (int k = 1; k <= n; ++k) {
      const Rational& t = tf.entry(n, k);
      if (t == 0) continue;
      s += t * r[k];
    }
    a[static_cast<std::size_t>(n)] = std::move(s);
  }
  return TruncatedSeries(std::move(a));
}

// ---- x * R(F(x)) ----

CompositaTriangle composita_x_R_of_F(const PowerCoefficientTable& rt,
                                     const CompositaTriangle& tf, int rows) {
  const Rational& r0 = rt.coefficient(0, 1);
  if (r0 == 0) throw gf_error(errc::zero_r0, "outer series must have r(0) != 0");
  const int supported = std::min({rt.max_power(), rt.max_order() + 1, tf.max_row() + 1});
  rows = resolve_rows(rows, supported, "x*R(F(x)) source data");

  std::vector<Rational> entries(triangle_size(rows), Rational(0));
  Rational diag = 1;
  for (int n = 1; n <= rows; ++n) {
    diag *= r0;
    entries[entry_index(n, n)] = diag;
    for (int m = 1; m < n; ++m) {
      Rational s = 0;
      for (int k = 1; k <= n - m; ++k) {
        const Rational& t = tf.entry(n - m, k);
        if (t == 0) continue;
        s += t * rt.coefficient(k, m);
      }
      entries[entry_index(n, m)] = std::move(s);
    }
  }
  return CompositaTriangle(rows, std::move(entries));
}

// ---- reciprocal ----

CompositaTriangle reciprocal_composita(const CompositaTriangle& txb, int rows) {
  const Rational& b0 = txb.entry(1, 1);
  if (b0 == 0) throw gf_error(errc::zero_leading_entry, "source entry (1,1) must be nonzero");
  rows = resolve_rows(rows, txb.max_row() / 2 + 1, "reciprocal source triangle");

  CombinatoricsCache cache(rows);
  // inv_pow[j] = (1/b0)^j, needed up to max(rows, rows-1)
  std::vector<Rational> inv_pow(static_cast<std::size_t>(rows) + 1, Rational(1));
  const Rational inv_b0 = 1 / b0;
  for (int j = 1; j <= rows; ++j) inv_pow[static_cast<std::size_t>(j)] = inv_pow[j - 1] * inv_b0;

  std::vector<Rational> entries(triangle_size(rows), Rational(0));
  for (int n = 1; n <= rows; ++n) {
    entries[entry_index(n, n)] = inv_pow[static_cast<std::size_t>(n)];
    for (int m = 1; m < n; ++m) {
      Rational s = 0;
      for (int k = 1; k <= n - m; ++k) {
        Rational inner = 0;
        for (int j = 1; j <= k; ++j) {
          const Rational& src = txb.entry(n - m + j, j);
          if (src == 0) continue;
          Rational term = inv_pow[static_cast<std::size_t>(j)] *
                          Rational(cache.binomial(k, j)) * src;
          inner += j % 2 == 0 ? term : -term;
        }
        if (inner != 0) s += Rational(cache.binomial(m + k - 1, m - 1)) * inner;
      }
      entries[entry_index(n, m)] = inv_pow[static_cast<std::size_t>(m)] * s;
    }
  }
  return CompositaTriangle(rows, std::move(entries));
}

// ---- Lagrange inversion ----

CompositaTriangle lagrange_composita(const CompositaTriangle& tg, int rows) {
  rows = resolve_rows(rows, (tg.max_row() + 1) / 2, "Lagrange source triangle");
  std::vector<Rational> entries(triangle_size(rows));
  for (int n = 1; n <= rows; ++n)
    for (int k = 1; k <= n; ++k)
      entries[entry_index(n, k)] = make_rational(k, n) * tg.entry(2 * n - k, n);
  return CompositaTriangle(rows, std::move(entries));
}

// ---- reversion ----

CompositaTriangle reversion_composita(const CompositaTriangle& tf, int rows) {
  const Rational& f1 = tf.entry(1, 1);
  if (f1 == 0) throw gf_error(errc::zero_linear_term, "source entry (1,1) must be nonzero");
  rows = resolve_rows(rows, tf.max_row() / 2 + 1, "reversion source triangle");

  CombinatoricsCache cache(rows);
  std::vector<Rational> inv_pow(static_cast<std::size_t>(rows) + 1, Rational(1));
  const Rational inv_f1 = 1 / f1;
  for (int j = 1; j <= rows; ++j) inv_pow[static_cast<std::size_t>(j)] = inv_pow[j - 1] * inv_f1;

  std::vector<Rational> entries(triangle_size(rows), Rational(0));
  for (int n = 1; n <= rows; ++n) {
    entries[entry_index(n, n)] = inv_pow[static_cast<std::size_t>(n)];
    for (int m = 1; m < n; ++m) {
      Rational s = 0;
      for (int k = 1; k <= n - m; ++k) {
        Rational inner = 0;
        for (int j = 1; j <= k; ++j) {
          const Rational& src = tf.entry(n - m + j, j);
          if (src == 0) continue;
          Rational term = inv_pow[static_cast<std::size_t>(j)] *
                          Rational(cache.binomial(k, j)) * src;
          inner += j % 2 == 0 ? term : -term;
        }
        if (inner != 0) s += Rational(cache.binomial(n + k - 1, n - 1)) * inner;
      }
      entries[entry_index(n, m)] =
          make_rational(m, n) * inv_pow[static_cast<std::size_t>(n)] * s;
    }
  }
  return CompositaTriangle(rows, std::move(entries));
}

TruncatedSeries reverse_coefficients(const CompositaTriangle& tf, int order) {
  const Rational& f1 = tf.entry(1, 1);
  if (f1 != 1)
    throw gf_error(errc::linear_term_not_one,
                   "normalized reversion needs f(1) == 1, got " + to_string(f1));
  order = resolve_rows(order, tf.max_row() / 2 + 1, "reversion source triangle");

  CombinatoricsCache cache(order);
  std::vector<Rational> a(static_cast<std::size_t>(order) + 1, Rational(0));
  a[1] = 1;
  for (int n = 2; n <= order; ++n) {
    Rational s = 0;
    for (int k = 1; k <= n - 1; ++k) {
      Rational inner = 0;
      for (int j = 1; j <= k; ++j) {
        const Rational& src = tf.entry(n + j - 1, j);
        if (src == 0) continue;
        Rational term = Rational(cache.binomial(k, j)) * src;
        inner += j % 2 == 0 ? term : -term;
      }
      if (inner != 0) s += Rational(cache.binomial(n + k - 1, n - 1)) * inner;
    }
    a[static_cast<std::size_t>(n)] = make_rational(1, n) * s;
  }
  return TruncatedSeries(std::move(a));
}

// ---- functional equation ----

TruncatedSeries solve_functional(const GFExpression& f_expr, const GFExpression& g_expr,
                                 int order) {
  if (order < 1) throw gf_error(errc::invalid_parameter, "solve order must be >= 1");

  // the reversion transform reads source rows up to 2*(order-1)
  const int src_rows = std::max(1, 2 * (order - 1));
  const TruncatedSeries f = evaluate_series(f_expr, src_rows);
  if (!f.has_zero_constant_term())
    throw gf_error(errc::nonzero_constant, "left side must have F(0) == 0");
  if (f[1] == 0) throw gf_error(errc::zero_linear_term, "left side must have F'(0) != 0");
  const TruncatedSeries g = evaluate_series(g_expr, order);
  if (!g.has_zero_constant_term())
    throw gf_error(errc::nonzero_constant_term, "right side must have G(0) == 0");

  const CompositaTriangle tf = composita_by_powers(f, src_rows);
  const TruncatedSeries w = f[1] == 1
                                ? reverse_coefficients(tf, order)
                                : reversion_composita(tf, order).column(1);
  const CompositaTriangle tg = composita_by_powers(g, order);
  const TruncatedSeries a = compose_coefficients(tg, w);

  // substitute back before handing the result out; a failure here would
  // mean the transform chain itself is wrong
  if (!(compose_series(f, a) == g))
    throw gf_error(errc::residual_nonzero, "solution fails to satisfy F(A(x)) = G(x)");
  return a;
}

}  // namespace composita
