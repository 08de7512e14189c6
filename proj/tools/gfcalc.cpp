// gfcalc: exact generating-function calculator.
//
// Every result that comes out of a triangle transform is verified by
// substitution before it is printed; a verification failure exits with
// code 4 and prints nothing on stdout.  Exit codes: 0 success, 2 bad
// expression syntax, 3 domain error (wrong constant term, zero linear
// term, ...), 4 failed post-verification.

#include <composita/composita.hpp>
#include <composita/document.hpp>
#include <composita/error.hpp>
#include <composita/evaluate.hpp>
#include <composita/parser.hpp>
#include <composita/series.hpp>
#include <composita/transforms.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>

namespace {

using namespace composita;

struct Options {
  std::string expr;
  std::string f_expr;
  std::string g_expr;
  int order = 16;
  std::string format = "table";
  bool check = false;
  bool factorial_scale = false;
};

void emit(const OutputDocument& doc, const std::string& format) {
  std::cout << doc.render(format);
  if (format == "json") std::cout << '\n';
}

TruncatedSeries factorial_scaled(const TruncatedSeries& s) {
  std::vector<Rational> c(s.coefficients());
  Integer fact = 1;
  for (int n = 1; n <= s.order(); ++n) {
    fact *= n;
    c[static_cast<std::size_t>(n)] *= Rational(fact);
  }
  return TruncatedSeries(std::move(c));
}

int run_series(const Options& opt) {
  const ExprPtr e = parse_expression(opt.expr);
  emit(OutputDocument::from_series(evaluate_series(*e, opt.order), to_text(*e)), opt.format);
  return 0;
}

int run_composita(const Options& opt) {
  const ExprPtr e = parse_expression(opt.expr);
  const CompositaTriangle t = evaluate_composita(*e, opt.order);
  if (opt.check) {
    // definitional cross-check against composition enumeration; the
    // oracle is exponential, so it covers at most the first 12 rows
    const int check_rows = std::min(opt.order, 12);
    const TruncatedSeries f = evaluate_series(*e, check_rows);
    const CompositaTriangle oracle = composita_by_compositions(f, check_rows);
    bool equal = true;
    for (int n = 1; equal && n <= check_rows; ++n)
      for (int k = 1; k <= n; ++k)
        if (t.entry(n, k) != oracle.entry(n, k)) {
          equal = false;
          break;
        }
    std::cerr << "check: " << (equal ? "EQUAL" : "UNEQUAL") << " (rows 1.." << check_rows
              << " against composition enumeration)\n";
    if (!equal)
      throw gf_error(errc::residual_nonzero, "triangle disagrees with composition enumeration");
  }
  emit(OutputDocument::from_triangle(t, to_text(*e)), opt.format);
  return 0;
}

int run_reverse(const Options& opt) {
  const ExprPtr e = parse_expression(opt.expr);
  const int src_rows = std::max(1, 2 * (opt.order - 1));
  const TruncatedSeries f = evaluate_series(*e, src_rows);
  if (!f.has_zero_constant_term())
    throw gf_error(errc::nonzero_constant, "reverse needs f(0) == 0");
  if (f[1] == 0) throw gf_error(errc::zero_linear_term, "reverse needs f(1) != 0");

  const CompositaTriangle tf = composita_by_powers(f, src_rows);
  const TruncatedSeries a = f[1] == 1 ? reverse_coefficients(tf, opt.order)
                                      : reversion_composita(tf, opt.order).column(1);
  if (!(compose_series(f, a) == x_series(opt.order)))
    throw gf_error(errc::residual_nonzero, "reverse candidate fails f(a(x)) = x");
  emit(OutputDocument::from_series(a, to_text(*e)), opt.format);
  return 0;
}

int run_reciprocal(const Options& opt) {
  const ExprPtr e = parse_expression(opt.expr);
  const TruncatedSeries b = evaluate_series(*e, opt.order);
  if (b[0] == 0)
    throw gf_error(errc::zero_constant_term, "reciprocal needs b(0) != 0");

  // the triangle route describes x/B(x); coefficient n of 1/B is entry
  // (n+1, 1), so one extra output row and two source rows per output row
  const int rows = opt.order + 1;
  const int src_rows = std::max(1, 2 * (rows - 1));
  const TruncatedSeries xb = shift_up(evaluate_series(*e, src_rows));
  const CompositaTriangle txb = composita_by_powers(xb, src_rows);
  const CompositaTriangle t = reciprocal_composita(txb, rows);
  std::vector<Rational> coeffs(static_cast<std::size_t>(opt.order) + 1);
  for (int n = 0; n <= opt.order; ++n) coeffs[static_cast<std::size_t>(n)] = t.entry(n + 1, 1);
  const TruncatedSeries a{std::move(coeffs)};
  if (!(a == reciprocal_series(b)))
    throw gf_error(errc::residual_nonzero, "reciprocal candidate disagrees with the series recurrence");
  emit(OutputDocument::from_series(a, to_text(*make_inv(e))), opt.format);
  return 0;
}

int run_solve(const Options& opt) {
  const ExprPtr f = parse_expression(opt.f_expr);
  const ExprPtr g = parse_expression(opt.g_expr);
  TruncatedSeries a = solve_functional(*f, *g, opt.order);
  if (opt.factorial_scale) a = factorial_scaled(a);
  emit(OutputDocument::from_series(
           a, "solve " + to_text(*f) + " = " + to_text(*g) +
                  (opt.factorial_scale ? ", scaled by n!" : "")),
       opt.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generating-function calculator on composita triangles"};
  app.require_subcommand(1);

  Options opt;
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
  };

  auto* series = app.add_subcommand("series", "expand an expression to a coefficient sequence");
  series->add_option("expr", opt.expr, "generating-function expression")->required();
  series->add_option("--order", opt.order, "highest coefficient index")->capture_default_str();
  add_format(series);

  auto* comp = app.add_subcommand(
      "composita", "triangle of [x^n] f(x)^k for an expression with f(0) = 0");
  comp->add_option("expr", opt.expr, "generating-function expression")->required();
  comp->add_option("--rows", opt.order, "number of triangle rows")->capture_default_str();
  comp->add_flag("--check", opt.check,
                 "cross-check rows 1..min(rows,12) against composition enumeration");
  add_format(comp);

  auto* rev = app.add_subcommand(
      "reverse", "compositional inverse computed through the reversion triangle transform");
  rev->add_option("expr", opt.expr, "series to invert, f(0) = 0, f(1) != 0")->required();
  rev->add_option("--order", opt.order, "highest coefficient index")->capture_default_str();
  add_format(rev);

  auto* recip = app.add_subcommand(
      "reciprocal", "coefficients of x/b(x) computed through the reciprocal triangle transform");
  recip->add_option("expr", opt.expr, "series b with b(0) != 0")->required();
  recip->add_option("--order", opt.order, "highest coefficient index")->capture_default_str();
  add_format(recip);

  auto* solve = app.add_subcommand("solve", "solve f(a(x)) = g(x) for a(x)");
  solve->add_option("--f", opt.f_expr, "left side, f(0) = 0, f(1) != 0")->required();
  solve->add_option("--g", opt.g_expr, "right side, g(0) = 0")->required();
  solve->add_option("--order", opt.order, "highest coefficient index")->capture_default_str();
  solve->add_flag("--factorial-scale", opt.factorial_scale, "multiply a(n) by n!");
  add_format(solve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (series->parsed()) return run_series(opt);
    if (comp->parsed()) return run_composita(opt);
    if (rev->parsed()) return run_reverse(opt);
    if (recip->parsed()) return run_reciprocal(opt);
    if (solve->parsed()) return run_solve(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return composita::cli_exit_code(e);
  }
  return 0;
}
