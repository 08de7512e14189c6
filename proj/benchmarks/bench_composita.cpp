#include <composita/composita.hpp>
#include <composita/evaluate.hpp>
#include <composita/parser.hpp>
#include <composita/series.hpp>
#include <composita/transforms.hpp>

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace composita;

TruncatedSeries padded_quadratic(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  c[1] = 1;
  c[2] = 1;
  return TruncatedSeries(std::move(c));
}

void BM_CompositaByPowers(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  const TruncatedSeries f = padded_quadratic(rows);
  for (auto _ : state) benchmark::DoNotOptimize(composita_by_powers(f, rows));
}
BENCHMARK(BM_CompositaByPowers)->Arg(8)->Arg(16)->Arg(32);

void BM_CompositaByCompositions(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  const TruncatedSeries f = padded_quadratic(rows);
  for (auto _ : state) benchmark::DoNotOptimize(composita_by_compositions(f, rows));
}
BENCHMARK(BM_CompositaByCompositions)->Arg(8)->Arg(12);

void BM_ClosedFormLog(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(closed_form_composita({ClosedFormKind::log_shift}, rows));
}
BENCHMARK(BM_ClosedFormLog)->Arg(16)->Arg(32);

void BM_PowersLog(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  const TruncatedSeries f = log1p_series(rows);
  for (auto _ : state) benchmark::DoNotOptimize(composita_by_powers(f, rows));
}
BENCHMARK(BM_PowersLog)->Arg(16)->Arg(32);

void BM_ReversionComposita(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  const CompositaTriangle tf =
      composita_by_powers(padded_quadratic(2 * (rows - 1)), 2 * (rows - 1));
  for (auto _ : state) benchmark::DoNotOptimize(reversion_composita(tf, rows));
}
BENCHMARK(BM_ReversionComposita)->Arg(8)->Arg(12);

void BM_ReversionSolver(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const TruncatedSeries f = padded_quadratic(order);
  for (auto _ : state) benchmark::DoNotOptimize(reversion_series_newton(f));
}
BENCHMARK(BM_ReversionSolver)->Arg(8)->Arg(12);

void BM_ParseAndEvaluate(benchmark::State& state) {
  const char* text = "rev(2*log1p(x) - x) + compose(x + x^2, x - x^3)";
  for (auto _ : state) {
    const ExprPtr e = parse_expression(text);
    benchmark::DoNotOptimize(evaluate_series(*e, 16));
  }
}
BENCHMARK(BM_ParseAndEvaluate);

}  // namespace

BENCHMARK_MAIN();
