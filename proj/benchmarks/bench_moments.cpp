#include <benchmark/benchmark.h>

#include "cuem/haar.hpp"
#include "cuem/matrix.hpp"
#include "cuem/moments.hpp"
#include "cuem/painleve.hpp"

namespace {

void bm_sumofdets(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto v = cuem::deriv_moment_sumofdets(8, k);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(bm_sumofdets)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void bm_laguerre_k(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto v = cuem::deriv_moment_laguerre_k(8, k);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(bm_laguerre_k)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void bm_painleve(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto v = cuem::painleve_moment(8, k);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(bm_painleve)->Arg(1)->Arg(2)->Arg(3)->Arg(4)->Arg(6)->Arg(8);

void bm_rational_determinant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  cuem::RingMatrix<cuem::BigRational> m(n, cuem::BigRational(0));
  long v = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = cuem::BigRational((v = v * 31 % 1013) - 500, 7);
  for (auto _ : state) {
    auto d = cuem::determinant(m);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(bm_rational_determinant)->Arg(4)->Arg(6)->Arg(8);

void bm_sample_haar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  cuem::RandomStream stream(1);
  for (auto _ : state) {
    auto x = cuem::sample_haar(n, stream);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(bm_sample_haar)->Arg(2)->Arg(3)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
