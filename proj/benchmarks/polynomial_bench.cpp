#include <benchmark/benchmark.h>

#include <random>

#include "frobenius/bivariate.hpp"
#include "frobenius/gap_polynomials.hpp"
#include "frobenius/graded_hilbert.hpp"

using namespace frobenius;

static void BM_FunctionalEquation(benchmark::State& state) {
  const auto b = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_functional_equation(b - 1, b));
}
BENCHMARK(BM_FunctionalEquation)->Arg(10)->Arg(40)->Arg(100);

static void BM_ReciprocalDuality(benchmark::State& state) {
  const auto b = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(reciprocal_duality(b - 1, b));
}
BENCHMARK(BM_ReciprocalDuality)->Arg(10)->Arg(40)->Arg(100);

static void BM_SeriesIdentity(benchmark::State& state) {
  const auto b = state.range(0);
  const auto order = static_cast<std::size_t>((b - 1) * b + 10);
  for (auto _ : state) benchmark::DoNotOptimize(series_identity_check(b - 1, b, order));
}
BENCHMARK(BM_SeriesIdentity)->Arg(10)->Arg(30);

static void BM_DivideByToricBinomial(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint32_t> e(0, static_cast<std::uint32_t>(state.range(0)));
  std::uniform_int_distribution<int> c(-50, 50);
  BivariatePolynomial g;
  for (int k = 0; k < 30; ++k) g.add_term({e(rng), e(rng)}, Rational(c(rng), 7));
  const auto f = toric_binomial(4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(divide(g, f));
}
BENCHMARK(BM_DivideByToricBinomial)->Arg(12)->Arg(48);
