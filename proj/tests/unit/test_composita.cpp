#include <composita/composita.hpp>
#include <composita/error.hpp>
#include <composita/series.hpp>
#include <composita/special_numbers.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <vector>

using namespace composita;

namespace {

TruncatedSeries series_of(std::vector<int> ints) {
  std::vector<Rational> c(ints.begin(), ints.end());
  return TruncatedSeries(std::move(c));
}

TruncatedSeries padded(const TruncatedSeries& s, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int n = 0; n <= order; ++n) c[static_cast<std::size_t>(n)] = s.coefficient(n);
  return TruncatedSeries(std::move(c));
}

// the named zero-constant-term series every triangle test reuses
std::vector<TruncatedSeries> zero_corpus(int order) {
  std::vector<TruncatedSeries> corpus{
      shift_up(geometric_series(order)),                      // x/(1-x)
      padded(series_of({0, 1, 1}), order),                    // x + x^2
      padded(series_of({0, 1, 2, 3}), order),                 // x + 2x^2 + 3x^3
      log1p_series(order),
      expm1_series(order),
      padded(series_of({0, 1, -1}), order),                   // x - x^2
      padded(series_of({0, 1, -1, -1}), order),                // x - x^2 - x^3
  };
  return corpus;
}

template <typename Fn>
errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const gf_error& e) {
    return e.code();
  }
  FAIL("expected a gf_error");
  return errc::invalid_parameter;
}

}  // namespace

TEST_CASE("entry conventions") {
  const CompositaTriangle t = composita_by_powers(series_of({0, 1, 1, 0}), 3);
  CHECK(t.max_row() == 3);
  CHECK(t.entry(0, 0) == 1);   // zeroth power of a zero-constant series
  CHECK(t.entry(2, 0) == 0);
  CHECK(t.entry(2, 3) == 0);   // right of the diagonal
  CHECK(t.entry(1, -1) == 0);
  CHECK(t.entry(-1, 1) == 0);
  CHECK(code_of([&] { t.entry(4, 1); }) == errc::row_out_of_range);

  CHECK(t.column(1) == series_of({0, 1, 1, 0}));
  CHECK(t.column(3).coefficient(3) == 1);
  CHECK(code_of([&] { t.column(0); }) == errc::row_out_of_range);
  CHECK(code_of([&] { t.column(4); }) == errc::row_out_of_range);

  CHECK(code_of([] { CompositaTriangle(2, {Rational(1)}); }) == errc::shape_mismatch);
  CHECK(code_of([] { CompositaTriangle(0, {}); }) == errc::invalid_parameter);
}

TEST_CASE("compositions oracle equals the power recurrence") {
  auto corpus = zero_corpus(10);
  for (unsigned seed = 50; seed < 53; ++seed)
    corpus.push_back(testsupport::random_zero_series(seed, 10));
  for (const TruncatedSeries& f : corpus)
    CHECK(composita_by_compositions(f, 10) == composita_by_powers(f, 10));
}

TEST_CASE("triangle entries are power coefficients") {
  for (const TruncatedSeries& f : zero_corpus(9)) {
    const CompositaTriangle t = composita_by_powers(f, 9);
    for (int k = 1; k <= 9; ++k) {
      const TruncatedSeries fk = pow(f, k);
      for (int n = k; n <= 9; ++n) CHECK(t.entry(n, k) == fk[n]);
    }
  }
}

TEST_CASE("boundary laws") {
  auto corpus = zero_corpus(8);
  corpus.push_back(testsupport::random_zero_series(60, 8));
  for (const TruncatedSeries& f : corpus) {
    const CompositaTriangle t = composita_by_powers(f, 8);
    for (int n = 1; n <= 8; ++n) {
      CHECK(t.entry(n, 1) == f[n]);
      CHECK(t.entry(n, n) == rational_pow(f[1], n));
    }
  }
}

TEST_CASE("pascal triangle from x/(1-x)") {
  const std::string text = testsupport::read_file(testsupport::data_path("pascal_triangle.txt"));
  CHECK(text == testsupport::generate_fixture("pascal_triangle.txt"));
  const auto rows = testsupport::parse_fixture_rows(text);
  REQUIRE(rows.size() == 10);

  const CompositaTriangle t = composita_by_powers(shift_up(geometric_series(10)), 10);
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(t.entry(n, k) == rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)]);
}

TEST_CASE("definitional construction guards") {
  CHECK(code_of([] { composita_by_compositions(series_of({1, 1}), 1); }) ==
        errc::nonzero_constant_term);
  CHECK(code_of([] { composita_by_powers(series_of({1, 1}), 1); }) ==
        errc::nonzero_constant_term);
  CHECK(code_of([] { composita_by_compositions(x_series(3), 4); }) == errc::insufficient_rows);
  CHECK(code_of([] { composita_by_powers(x_series(3), 4); }) == errc::insufficient_rows);
  CHECK(code_of([] { composita_by_compositions(x_series(16), 13); }) == errc::invalid_parameter);
  CHECK(code_of([] { composita_by_powers(x_series(3), 0); }) == errc::invalid_parameter);
}

TEST_CASE("closed forms match the power route for all five families") {
  const std::vector<ClosedFormFamily> families{
      {ClosedFormKind::linear_quadratic, 1, 1},
      {ClosedFormKind::linear_quadratic, 2, make_rational(-1, 3)},
      {ClosedFormKind::rational_linear, 1, 1},
      {ClosedFormKind::rational_linear, make_rational(-3, 2), 2},
      {ClosedFormKind::log_shift},
      {ClosedFormKind::exp_shift},
      {ClosedFormKind::geometric},
  };
  for (const ClosedFormFamily& family : families) {
    const CompositaTriangle closed = closed_form_composita(family, 15);
    const CompositaTriangle direct = composita_by_powers(family.series(15), 15);
    CHECK(closed == direct);
  }
}

TEST_CASE("closed form spot values") {
  CHECK(closed_form_composita({ClosedFormKind::linear_quadratic, 1, 1}, 5).entry(5, 3) == 3);
  CHECK(closed_form_composita({ClosedFormKind::rational_linear, 1, 1}, 3).entry(3, 1) == 1);
  CHECK(closed_form_composita({ClosedFormKind::exp_shift}, 3).entry(3, 2) == 1);
  CHECK(closed_form_composita({ClosedFormKind::log_shift}, 3).entry(3, 2) == -1);
  CHECK(closed_form_composita({ClosedFormKind::log_shift}, 3).entry(3, 1) == make_rational(1, 3));

  const CompositaTriangle geom = closed_form_composita({ClosedFormKind::geometric}, 5);
  const std::vector<int> row5{1, 4, 6, 4, 1};
  for (int k = 1; k <= 5; ++k) CHECK(geom.entry(5, k) == row5[static_cast<std::size_t>(k - 1)]);
}

TEST_CASE("closed form parameter validation") {
  CHECK(code_of([] { closed_form_composita({ClosedFormKind::linear_quadratic, 0, 1}, 3); }) ==
        errc::invalid_parameter);
  CHECK(code_of([] { closed_form_composita({ClosedFormKind::geometric}, 0); }) ==
        errc::invalid_parameter);
  // a = 0 degenerates the rational family to b*x, which stays valid
  const CompositaTriangle t = closed_form_composita({ClosedFormKind::rational_linear, 0, 2}, 4);
  CHECK(t == composita_by_powers(scale(x_series(4), 2), 4));
}

TEST_CASE("composita_scale applies c^k") {
  const TruncatedSeries l = log1p_series(8);
  const CompositaTriangle doubled = composita_scale(composita_by_powers(l, 8), 2);
  CHECK(doubled == composita_by_powers(scale(l, 2), 8));

  const CompositaTriangle t = composita_by_powers(series_of({0, 1, 1}), 2);
  CHECK(composita_scale(t, 1) == t);

  const CompositaTriangle zero = composita_scale(t, 0);
  CHECK(zero.entry(1, 1) == 0);
  CHECK(zero.entry(2, 2) == 0);
}

TEST_CASE("composita_sum matches the summed series") {
  const int rows = 8;
  const TruncatedSeries f = scale(log1p_series(rows), 2);
  const TruncatedSeries g = negate(x_series(rows));
  const CompositaTriangle sum =
      composita_sum(composita_by_powers(f, rows), composita_by_powers(g, rows));
  CHECK(sum == composita_by_powers(add(f, g), rows));

  const TruncatedSeries p = testsupport::random_zero_series(70, rows);
  const TruncatedSeries q = testsupport::random_zero_series(71, rows);
  CHECK(composita_sum(composita_by_powers(p, rows), composita_by_powers(q, rows)) ==
        composita_by_powers(add(p, q), rows));

  CHECK(code_of([&] {
          composita_sum(composita_by_powers(f, 3), composita_by_powers(g, 4));
        }) == errc::shape_mismatch);
}

TEST_CASE("composita_product_with_series matches the multiplied series") {
  const int rows = 10;
  const TruncatedSeries l = log1p_series(rows);
  const TruncatedSeries one_minus_x = padded(series_of({1, -1}), rows - 1);
  const CompositaTriangle prod =
      composita_product_with_series(composita_by_powers(l, rows), one_minus_x);
  CHECK(prod == composita_by_powers(mul(l, padded(one_minus_x, rows)), rows));

  const TruncatedSeries f = testsupport::random_zero_series(80, rows);
  const TruncatedSeries b = testsupport::random_unit_series(81, rows - 1);
  CHECK(composita_product_with_series(composita_by_powers(f, rows), b) ==
        composita_by_powers(mul(f, padded(b, rows)), rows));

  CHECK(code_of([&] {
          composita_product_with_series(composita_by_powers(l, rows), series_of({1, -1}));
        }) == errc::shape_mismatch);
}

TEST_CASE("product triangle equals its double-sum expansion") {
  // entry(n, k) = k! sum_{i=k..n} (1/i!) s(i, k) C(k, n-i) (-1)^(n-i)
  // for log(1+x) * (1-x): the first-kind factor comes from log powers,
  // the alternating binomial from the (1-x)^k expansion
  const int rows = 10;
  const CombinatoricsCache cache(rows);
  const CompositaTriangle prod = composita_product_with_series(
      composita_by_powers(log1p_series(rows), rows), padded(series_of({1, -1}), rows - 1));
  for (int n = 1; n <= rows; ++n)
    for (int k = 1; k <= n; ++k) {
      Rational sum = 0;
      for (int i = k; i <= n; ++i) {
        const Rational term = make_rational(cache.stirling1_signed(i, k), factorial(i)) *
                              Rational(cache.binomial(k, n - i));
        sum += (n - i) % 2 == 0 ? term : -term;
      }
      CHECK(prod.entry(n, k) == sum * Rational(factorial(k)));
    }
}

TEST_CASE("column extraction round trips through powers") {
  const TruncatedSeries f = series_of({0, 1, 1, 1, 0, 0, 0, 0, 0});
  const CompositaTriangle t = composita_by_powers(f, 8);
  for (int k = 1; k <= 8; ++k) {
    const TruncatedSeries col = series_from_composita(t, k);
    const TruncatedSeries fk = pow(f, k);
    for (int n = 0; n <= 8; ++n) CHECK(col.coefficient(n) == fk.coefficient(n));
  }
}
