#include <benchmark/benchmark.h>

#include "beatty/fibonacci.hpp"
#include "beatty/intmath.hpp"
#include "beatty/metallic.hpp"
#include "beatty/morphism.hpp"
#include "beatty/quadratic.hpp"
#include "beatty/sequences.hpp"

namespace {

using namespace beatty;

void bm_floor_multiple_small(benchmark::State& state) {
  const auto phi = QuadraticIrrational::golden_ratio();
  Int n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi.floor_multiple(n));
    n += 17;
    if (n > 1000000) n = 1;
  }
}
BENCHMARK(bm_floor_multiple_small);

void bm_floor_multiple_big(benchmark::State& state) {
  const auto phi = QuadraticIrrational::golden_ratio();
  const Int start("123456789012345678901234567890123456789");
  Int n = start;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi.floor_multiple(n));
    n += 12345;
  }
}
BENCHMARK(bm_floor_multiple_big);

void bm_isqrt_u128(benchmark::State& state) {
  u128 x = (u128(0x123456789abcdefULL) << 64) | 0xfedcba9876543210ULL;
  for (auto _ : state) {
    benchmark::DoNotOptimize(isqrt_u128(x));
    x += 0x10000001ULL;
  }
}
BENCHMARK(bm_isqrt_u128);

void bm_fixed_point_letters(benchmark::State& state) {
  for (auto _ : state) {
    auto w = fixed_point(fib_f());
    benchmark::DoNotOptimize(w->take(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(bm_fixed_point_letters)->Arg(10000)->Arg(100000);

void bm_decorated_stream(benchmark::State& state) {
  const auto td = tau_delta(3);
  const Symbol seed = td.tau.domain().index_of("1");
  for (auto _ : state) {
    auto w = decorate(td.tau, seed, td.delta);
    benchmark::DoNotOptimize(w->take(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(bm_decorated_stream)->Arg(10000)->Arg(100000);

void bm_complement_sieve(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(complement_sieve(5, 9, state.range(0)));
  }
}
BENCHMARK(bm_complement_sieve)->Arg(10000)->Arg(100000);

void bm_language_oracle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fib_language_oracle(5, 9, state.range(0)));
  }
}
BENCHMARK(bm_language_oracle)->Arg(10000)->Arg(100000);

void bm_classify_aa(benchmark::State& state) {
  const auto alpha = QuadraticIrrational::create(2, 1, 3, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_aa(alpha, 1000));
  }
}
BENCHMARK(bm_classify_aa);

}  // namespace

BENCHMARK_MAIN();
