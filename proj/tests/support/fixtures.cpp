#include "support/fixtures.hpp"

#include "support/oracles.hpp"

#include <composita/error.hpp>
#include <composita/series.hpp>

#include <fstream>
#include <sstream>

namespace testsupport {

using composita::factorial;
using composita::gf_error;
using composita::errc;
using composita::make_rational;
using composita::to_string;
using composita::TruncatedSeries;

namespace {

std::string catalan_fixture() {
  std::ostringstream out;
  out << "# catalan.txt\n"
         "# Catalan numbers C(0)..C(12) from the convolution recurrence\n"
         "# C(0) = 1, C(n+1) = sum_{i=0..n} C(i) C(n-i)\n"
         "# regenerate: fixture_gen\n";
  std::vector<Rational> c{Rational(1)};
  for (int n = 0; n < 12; ++n) {
    Rational next = 0;
    for (int i = 0; i <= n; ++i)
      next += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(n - i)];
    c.push_back(next);
  }
  for (const Rational& v : c) out << to_string(v) << '\n';
  return out.str();
}

std::string fibonacci_fixture() {
  std::ostringstream out;
  out << "# fibonacci.txt\n"
         "# a(0)..a(16) with a(0) = a(1) = 1, a(n) = a(n-1) + a(n-2);\n"
         "# the coefficients of 1/(1 - x - x^2)\n"
         "# regenerate: fixture_gen\n";
  std::vector<Rational> a{Rational(1), Rational(1)};
  for (int n = 2; n <= 16; ++n)
    a.push_back(a[static_cast<std::size_t>(n - 1)] + a[static_cast<std::size_t>(n - 2)]);
  for (const Rational& v : a) out << to_string(v) << '\n';
  return out.str();
}

std::string pascal_fixture() {
  std::ostringstream out;
  out << "# pascal_triangle.txt\n"
         "# rows n = 1..10 of C(n-1, k-1), k = 1..n, from the additive\n"
         "# Pascal recurrence; the triangle of x/(1-x)\n"
         "# regenerate: fixture_gen\n";
  std::vector<Rational> row{Rational(1)};
  for (int n = 1; n <= 10; ++n) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << ' ';
      out << to_string(row[k]);
    }
    out << '\n';
    std::vector<Rational> next(row.size() + 1, Rational(1));
    for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return out.str();
}

// triangle of n!/k! * [x^n] s(x)^k for n = 1..10, via the fixed-point
// oracle's own arithmetic (powers by repeated convolution)
std::string stirling_series_triangle(const TruncatedSeries& s) {
  std::ostringstream out;
  TruncatedSeries pw = composita::constant_series(1, 10);
  std::vector<TruncatedSeries> powers;  // powers[k] = s^k, k = 1..10
  for (int k = 1; k <= 10; ++k) {
    pw = mul(pw, s);
    powers.push_back(pw);
  }
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (k > 1) out << ' ';
      const Rational v = powers[static_cast<std::size_t>(k - 1)].coefficient(n) *
                         make_rational(factorial(n), factorial(k));
      out << to_string(v);
    }
    out << '\n';
  }
  return out.str();
}

std::string stirling1_signed_fixture() {
  std::ostringstream out;
  out << "# stirling1_signed.txt\n"
         "# rows n = 1..10 of the signed first-kind Stirling numbers s(n, k),\n"
         "# k = 1..n, computed as (n!/k!) [x^n] log(1+x)^k by series expansion\n"
         "# regenerate: fixture_gen\n";
  out << stirling_series_triangle(composita::log1p_series(10));
  return out.str();
}

std::string stirling2_fixture() {
  std::ostringstream out;
  out << "# stirling2.txt\n"
         "# rows n = 1..10 of the second-kind Stirling numbers {n, k},\n"
         "# k = 1..n, computed as (n!/k!) [x^n] (e^x - 1)^k by series expansion\n"
         "# regenerate: fixture_gen\n";
  out << stirling_series_triangle(composita::expm1_series(10));
  return out.str();
}

// f = 2x - (e^x - 1): f(1) = 1, f(n) = -1/n! for n >= 2
TruncatedSeries two_x_minus_expm1(int order) {
  std::vector<Rational> f(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int n = 1; n <= order; ++n) f[static_cast<std::size_t>(n)] = make_rational(-1, factorial(n));
  f[1] += 2;
  return TruncatedSeries(std::move(f));
}

// g = log(1+x): g(n) = (-1)^(n+1)/n
TruncatedSeries log_one_plus(int order) {
  std::vector<Rational> g(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int n = 1; n <= order; ++n)
    g[static_cast<std::size_t>(n)] = make_rational(n % 2 ? 1 : -1, n);
  return TruncatedSeries(std::move(g));
}

std::string solve_scaled_fixture() {
  std::ostringstream out;
  out << "# solve_scaled.txt\n"
         "# n! a(n) for n = 1..8 where a solves 2a(x) - (e^(a(x)) - 1) = log(1+x),\n"
         "# from the order-by-order fixed-point oracle (a(n) chosen so the\n"
         "# nth coefficient of the left side matches the right side)\n"
         "# regenerate: fixture_gen\n";
  const TruncatedSeries a = solve_fixed_point(two_x_minus_expm1(8), log_one_plus(8), 8);
  for (int n = 1; n <= 8; ++n) out << to_string(a.coefficient(n) * factorial(n)) << '\n';
  return out.str();
}

std::string total_partitions_fixture() {
  std::ostringstream out;
  out << "# total_partitions.txt\n"
         "# n! w(n) for n = 1..8 where w is the compositional inverse of\n"
         "# 2x - (e^x - 1), from the fixed-point oracle solving f(w(x)) = x;\n"
         "# the total-partitions counting sequence\n"
         "# regenerate: fixture_gen\n";
  const TruncatedSeries w = reverse_by_fixed_point(two_x_minus_expm1(8), 8);
  for (int n = 1; n <= 8; ++n) out << to_string(w.coefficient(n) * factorial(n)) << '\n';
  return out.str();
}

}  // namespace

const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> fixtures{
      {"catalan.txt", catalan_fixture},
      {"fibonacci.txt", fibonacci_fixture},
      {"pascal_triangle.txt", pascal_fixture},
      {"stirling1_signed.txt", stirling1_signed_fixture},
      {"stirling2.txt", stirling2_fixture},
      {"solve_scaled.txt", solve_scaled_fixture},
      {"total_partitions.txt", total_partitions_fixture},
  };
  return fixtures;
}

std::string generate_fixture(const std::string& filename) {
  for (const Fixture& f : all_fixtures())
    if (filename == f.filename) return f.generate();
  throw gf_error(errc::invalid_parameter, "no fixture named " + filename);
}

std::string data_path(const std::string& filename) {
  return std::string(COMPOSITA_TEST_DATA_DIR) + "/" + filename;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gf_error(errc::invalid_parameter, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::vector<Rational>> parse_fixture_rows(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::vector<Rational> row;
    std::string field;
    while (fields >> field) row.push_back(composita::rational_from_string(field));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Rational> parse_fixture_values(const std::string& text) {
  std::vector<Rational> values;
  for (const auto& row : parse_fixture_rows(text))
    for (const Rational& v : row) values.push_back(v);
  return values;
}

}  // namespace testsupport
