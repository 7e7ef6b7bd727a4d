#include "specforge/factorizer.hpp"
#include "specforge/fourier.hpp"
#include "specforge/ladder.hpp"
#include "specforge/measure.hpp"
#include "specforge/spectrum.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>

using namespace specforge;

namespace {

FactorSpec dyadic_side(std::size_t len, Side s) {
  FactorSpec spec;
  spec.ladder = Ladder(len, 2);
  spec.side = s;
  spec.level = spec.side_count();
  return spec;
}

void BM_VerifyPair(benchmark::State& state) {
  Ladder l(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_pair(l));
}
BENCHMARK(BM_VerifyPair)->Arg(8)->Arg(12)->Arg(16);

void BM_Convolve(benchmark::State& state) {
  BigInt n(state.range(0));
  DiscreteMeasure a = uniform_on_grid(n);
  DiscreteMeasure b = uniform_on_grid(n);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(a, b));
}
BENCHMARK(BM_Convolve)->Arg(64)->Arg(256);

void BM_FtTruncatedProduct(benchmark::State& state) {
  FactorSpec spec = dyadic_side(static_cast<std::size_t>(state.range(0)), Side::odd);
  double xi = 3.875;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ft_truncated_product(spec, spec.side_count(), xi));
    xi += 1e-6;
  }
}
BENCHMARK(BM_FtTruncatedProduct)->Arg(24)->Arg(80);

void BM_QFunction(benchmark::State& state) {
  FactorSpec spec = dyadic_side(12, Side::odd);
  Spectrum lam = lambda_k(spec, static_cast<std::size_t>(state.range(0)));
  double xi = 0.25;
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_function(spec, lam, 24, xi));
    xi += 1e-7;
  }
}
BENCHMARK(BM_QFunction)->Arg(3)->Arg(6);

void BM_GramNumeric(benchmark::State& state) {
  FactorSpec spec = dyadic_side(static_cast<std::size_t>(state.range(0)), Side::odd);
  std::size_t k = spec.side_count();
  Spectrum lam = lambda_k(spec, k);
  DiscreteMeasure m = approximant(spec, k);
  for (auto _ : state)
    benchmark::DoNotOptimize(gram_check_numeric(m, lam, 1e-10));
}
BENCHMARK(BM_GramNumeric)->Arg(8)->Arg(12);

void BM_EnumeratePairs(benchmark::State& state) {
  std::int64_t n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_complementary_pairs(n));
}
BENCHMARK(BM_EnumeratePairs)->Arg(24)->Arg(48);

}  // namespace

BENCHMARK_MAIN();
