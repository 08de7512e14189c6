#include <composita/composita.hpp>

#include <composita/error.hpp>
#include <composita/special_numbers.hpp>

#include <utility>

namespace composita {

namespace {

const Rational kZero{0};
const Rational kOne{1};

std::size_t triangle_size(int rows) {
  return static_cast<std::size_t>(rows) * (static_cast<std::size_t>(rows) + 1) / 2;
}

// row-major offset of (n, k), n >= 1, 1 <= k <= n
std::size_t entry_index(int n, int k) {
  return static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n) / 2 +
         static_cast<std::size_t>(k - 1);
}

void require_composita_source(const TruncatedSeries& f, int rows) {
  if (rows < 1) throw gf_error(errc::invalid_parameter, "triangle needs at least one row");
  if (!f.has_zero_constant_term())
    throw gf_error(errc::nonzero_constant_term, "composita source must have f(0) == 0");
  if (f.order() < rows)
    throw gf_error(errc::insufficient_rows,
                   "series of order " + std::to_string(f.order()) + " cannot fill " +
                       std::to_string(rows) + " rows");
}

}  // namespace

CompositaTriangle::CompositaTriangle(int max_row, std::vector<Rational> entries)
    : max_row_(max_row), entries_(std::move(entries)) {
  if (max_row < 1) throw gf_error(errc::invalid_parameter, "triangle needs at least one row");
  if (entries_.size() != triangle_size(max_row))
    throw gf_error(errc::shape_mismatch, "entry count does not match row count");
}

const Rational& CompositaTriangle::entry(int n, int k) const {
  if (k == 0) return n == 0 ? kOne : kZero;
  if (k < 0 || n < 1 || k > n) return kZero;
  if (n > max_row_)
    throw gf_error(errc::row_out_of_range,
                   "row " + std::to_string(n) + " exceeds stored " + std::to_string(max_row_));
  return entries_[entry_index(n, k)];
}

TruncatedSeries CompositaTriangle::column(int k) const {
  if (k < 1 || k > max_row_)
    throw gf_error(errc::row_out_of_range, "column " + std::to_string(k) + " not stored");
  std::vector<Rational> c(static_cast<std::size_t>(max_row_) + 1, Rational(0));
  for (int n = k; n <= max_row_; ++n) c[static_cast<std::size_t>(n)] = entry(n, k);
  return TruncatedSeries(std::move(c));
}

bool operator==(const CompositaTriangle& a, const CompositaTriangle& b) {
  return a.max_row_ == b.max_row_ && a.entries_ == b.entries_;
}

// ---- construction ----

CompositaTriangle composita_by_compositions(const TruncatedSeries& f, int rows) {
  require_composita_source(f, rows);
  if (rows > 12)
    throw gf_error(errc::invalid_parameter,
                   "composition enumeration is exponential; capped at 12 rows");

  std::vector<Rational> entries(triangle_size(rows), Rational(0));
  // walk every composition of n into ordered parts >= 1, accumulating the
  // product of f over the parts into the cell for (n, number of parts)
  const auto walk = [&](auto&& self, int n, int remaining, int parts,
                        const Rational& product) -> void {
    if (remaining == 0) {
      entries[entry_index(n, parts)] += product;
      return;
    }
    for (int part = 1; part <= remaining; ++part) {
      if (f[part] == 0) continue;  // composition contributes nothing
      self(self, n, remaining - part, parts + 1, product * f[part]);
    }
  };
  for (int n = 1; n <= rows; ++n) walk(walk, n, n, 0, Rational(1));
  return CompositaTriangle(rows, std::move(entries));
}

CompositaTriangle composita_by_powers(const TruncatedSeries& f, int rows) {
  require_composita_source(f, rows);
  std::vector<Rational> entries(triangle_size(rows), Rational(0));
  for (int n = 1; n <= rows; ++n) entries[entry_index(n, 1)] = f[n];
  for (int k = 2; k <= rows; ++k) {
    for (int n = k; n <= rows; ++n) {
      Rational s = 0;
      for (int i = 1; i <= n - k + 1; ++i) {
        if (f[i] == 0) continue;
        s += f[i] * entries[entry_index(n - i, k - 1)];
      }
      entries[entry_index(n, k)] = std::move(s);
    }
  }
  return CompositaTriangle(rows, std::move(entries));
}

TruncatedSeries series_from_composita(const CompositaTriangle& t, int k) { return t.column(k); }

// ---- closed forms ----

TruncatedSeries ClosedFormFamily::series(int order) const {
  switch (kind) {
    case ClosedFormKind::linear_quadratic: {
      auto s = monomial_series(1, a, order);
      return add(s, monomial_series(2, b, order));
    }
    case ClosedFormKind::rational_linear: {
      // b*x / (1 + a*x) = sum_{n>=1} b (-a)^(n-1) x^n
      std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
      Rational term = b;
      for (int n = 1; n <= order; ++n) {
        c[static_cast<std::size_t>(n)] = term;
        term *= -a;
      }
      return TruncatedSeries(std::move(c));
    }
    case ClosedFormKind::log_shift: return log1p_series(order);
    case ClosedFormKind::exp_shift: return expm1_series(order);
    case ClosedFormKind::geometric: return shift_up(geometric_series(order));
  }
  throw gf_error(errc::invalid_parameter, "unknown closed-form family");
}

const char* ClosedFormFamily::name() const {
  switch (kind) {
    case ClosedFormKind::linear_quadratic: return "a*x + b*x^2";
    case ClosedFormKind::rational_linear: return "b*x/(1 + a*x)";
    case ClosedFormKind::log_shift: return "ln(1 + x)";
    case ClosedFormKind::exp_shift: return "e^x - 1";
    case ClosedFormKind::geometric: return "x/(1 - x)";
  }
  return "?";
}

CompositaTriangle closed_form_composita(const ClosedFormFamily& family, int rows) {
  if (rows < 1) throw gf_error(errc::invalid_parameter, "triangle needs at least one row");
  if (family.kind == ClosedFormKind::linear_quadratic && family.a == 0)
    throw gf_error(errc::invalid_parameter, "a*x + b*x^2 closed form needs a != 0");

  CombinatoricsCache cache(rows);
  std::vector<Rational> entries(triangle_size(rows), Rational(0));
  for (int n = 1; n <= rows; ++n) {
    for (int k = 1; k <= n; ++k) {
      Rational v;
      switch (family.kind) {
        case ClosedFormKind::linear_quadratic: {
          const Integer& c = cache.binomial(k, n - k);
          if (c == 0) break;  // leaves v = 0 for n > 2k
          v = Rational(c) * rational_pow(family.a, 2 * k - n) *
              rational_pow(family.b, n - k);
          break;
        }
        case ClosedFormKind::rational_linear: {
          v = Rational(cache.binomial(n - 1, k - 1)) * rational_pow(family.a, n - k) *
              rational_pow(family.b, k);
          if ((n + k) % 2 != 0) v = -v;
          break;
        }
        case ClosedFormKind::log_shift:
          v = make_rational(factorial(k), factorial(n)) * Rational(cache.stirling1_signed(n, k));
          break;
        case ClosedFormKind::exp_shift:
          v = make_rational(factorial(k), factorial(n)) * Rational(cache.stirling2(n, k));
          break;
        case ClosedFormKind::geometric:
          v = Rational(cache.binomial(n - 1, k - 1));
          break;
      }
      entries[entry_index(n, k)] = std::move(v);
    }
  }
  return CompositaTriangle(rows, std::move(entries));
}

// ---- algebra on triangles ----

CompositaTriangle composita_scale(const CompositaTriangle& t, const Rational& c) {
  const int rows = t.max_row();
  std::vector<Rational> powers(static_cast<std::size_t>(rows) + 1, Rational(1));
  for (int k = 1; k <= rows; ++k) powers[static_cast<std::size_t>(k)] = powers[k - 1] * c;

  std::vector<Rational> entries(triangle_size(rows));
  for (int n = 1; n <= rows; ++n)
    for (int k = 1; k <= n; ++k)
      entries[entry_index(n, k)] = t.entry(n, k) * powers[static_cast<std::size_t>(k)];
  return CompositaTriangle(rows, std::move(entries));
}

CompositaTriangle composita_sum(const CompositaTriangle& tf, const CompositaTriangle& tg) {
  if (tf.max_row() != tg.max_row())
    throw gf_error(errc::shape_mismatch, "summands must have the same number of rows");
  const int rows = tf.max_row();
  CombinatoricsCache cache(rows);

  std::vector<Rational> entries(triangle_size(rows), Rational(0));
  for (int n = 1; n <= rows; ++n) {
    for (int k = 1; k <= n; ++k) {
      Rational s = 0;
      for (int l = 0; l <= k; ++l) {
        Rational conv = 0;
        for (int i = 0; i <= n; ++i) {
          const Rational& left = tf.entry(i, l);
          if (left == 0) continue;
          conv += left * tg.entry(n - i, k - l);
        }
        if (conv != 0) s += Rational(cache.binomial(k, l)) * conv;
      }
      entries[entry_index(n, k)] = std::move(s);
    }
  }
  return CompositaTriangle(rows, std::move(entries));
}

CompositaTriangle composita_product_with_series(const CompositaTriangle& tf,
                                                const TruncatedSeries& b) {
  const int rows = tf.max_row();
  if (b.order() < rows - 1)
    throw gf_error(errc::shape_mismatch,
                   "multiplier series needs order >= " + std::to_string(rows - 1));

  std::vector<Rational> entries(triangle_size(rows), Rational(0));
  // every access below is [x^(n-i)] b^k with n-i <= rows-1, so order
  // rows-1 is all the power products need
  const TruncatedSeries bt = b.order() > rows - 1 ? b.truncated(rows - 1) : b;
  TruncatedSeries bk = constant_series(1, rows - 1);  // b^k, updated per column
  for (int k = 1; k <= rows; ++k) {
    bk = mul(bk, bt);
    for (int n = k; n <= rows; ++n) {
      Rational s = 0;
      for (int i = k; i <= n; ++i) {
        const Rational& left = tf.entry(i, k);
        if (left == 0) continue;
        s += left * bk.coefficient(n - i);
      }
      entries[entry_index(n, k)] = std::move(s);
    }
  }
  return CompositaTriangle(rows, std::move(entries));
}

}  // namespace composita
