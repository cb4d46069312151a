#include <benchmark/benchmark.h>

#include "octopus/kazhdan.hpp"
#include "octopus/spectral.hpp"
#include "octopus/verify.hpp"

using namespace octopus;

namespace {

std::vector<Rational> ones(int count) {
  return std::vector<Rational>(count, Rational(1));
}

void BM_ConvolutionSquare(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AlgebraElement what = octopus_hat_from_x(ones(n - 1), n);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(what, what));
}

void BM_QuarticExpansion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = ones(n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(quartic_rhs(x, n));
}

void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(CharacterTable(n));
}

void BM_IrrepConstruction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(all_irreps(n));
}

void BM_GapMinTranspositions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  AlgebraElement that(n);
  for (const auto& t : all_transpositions(n)) that.add_term(t, 1);
  const auto irreps = all_irreps(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(gap_min(that, irreps, 1e-9, 1));
}

void BM_OctopusTrial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto irreps = all_irreps(n);
  Rng rng(1729);
  TranspositionWeights W(n);
  do {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (rng.bernoulli(0.5)) W.set(i, j, rng.unit_rational());
  } while (W.star_total() == 0);
  const AlgebraElement a = from_weights(W) - from_weights(theta(W)).lifted(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(gamma_member(a, irreps, 1e-8, 1));
}

void BM_KazhdanEstimate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  KazhdanConfig cfg;
  cfg.restarts = 8;
  const auto Q = all_transpositions(n);
  const UnitaryRep D = UnitaryRep::defining(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(kazhdan_rep_estimate(D, Q, cfg));
}

}  // namespace

BENCHMARK(BM_ConvolutionSquare)->Arg(4)->Arg(5)->Arg(6);
BENCHMARK(BM_QuarticExpansion)->Arg(4)->Arg(5)->Arg(6);
BENCHMARK(BM_CharacterTable)->Arg(6)->Arg(8);
BENCHMARK(BM_IrrepConstruction)->Arg(6)->Arg(7);
BENCHMARK(BM_GapMinTranspositions)->Arg(5)->Arg(6)->Arg(7);
BENCHMARK(BM_OctopusTrial)->Arg(5)->Arg(6);
BENCHMARK(BM_KazhdanEstimate)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
