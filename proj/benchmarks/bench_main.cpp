#include <benchmark/benchmark.h>

#include "bilateral/ball.hpp"
#include "bilateral/cotpoly.hpp"
#include "bilateral/theorems.hpp"
#include "bilateral/zeta.hpp"

using namespace bilateral;

static void BM_PiBall(benchmark::State& state) {
  const Precision prec(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pi_ball(prec));
}
BENCHMARK(BM_PiBall)->Arg(128)->Arg(512)->Arg(2048);

static void BM_SeriesBall(benchmark::State& state) {
  const Precision prec(static_cast<unsigned>(state.range(1)));
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s_series_ball(k, Rational(2, 7), prec));
}
BENCHMARK(BM_SeriesBall)->Args({2, 128})->Args({3, 128})->Args({11, 128})->Args({3, 512})->Args({3, 1024});

static void BM_QPolynomialUncached(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_polynomial_uncached(m));
}
BENCHMARK(BM_QPolynomialUncached)->Arg(10)->Arg(30)->Arg(60);

static void BM_Certify(benchmark::State& state) {
  const Precision prec(128);
  const Precision cap(1024);
  const Rational alpha(1, static_cast<long>(state.range(1)));
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify(k, alpha, prec, cap));
}
BENCHMARK(BM_Certify)->Args({3, 2})->Args({4, 6})->Args({5, 7})->Args({11, 12});

// After the first iteration this is a cache hit; the first-call cost shows
// up in BM_ZetaSeriesSum through zeta_even.
static void BM_Bernoulli(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli(n));
}
BENCHMARK(BM_Bernoulli)->Arg(20)->Arg(120);

static void BM_ZetaSeriesSum(benchmark::State& state) {
  const Precision prec(128);
  for (auto _ : state) benchmark::DoNotOptimize(zeta_series_sum(2, Rational(1, 3), SeriesParity::OddOrder, prec));
}
BENCHMARK(BM_ZetaSeriesSum);

BENCHMARK_MAIN();
