#include <benchmark/benchmark.h>

#include <cmath>

#include "gkt/kernels.hpp"
#include "gkt/ks_space.hpp"
#include "gkt/random.hpp"

namespace {

gkt::GridFunction chirp(std::size_t m) {
    const gkt::Grid grid(1, 8.0, m);
    return gkt::GridFunction::sample(grid, [](const gkt::Point& x) { return 2 * x[0] * std::cos(x[0] * x[0]); });
}

void BM_CubeFunctionalsSerial(benchmark::State& state) {
    const auto f = chirp(static_cast<std::size_t>(state.range(0)));
    const gkt::CubeEnumeration e(1, 512);
    for (auto _ : state) benchmark::DoNotOptimize(gkt::kernels::cube_functionals_serial(f, e.cubes()));
}

void BM_CubeFunctionalsParallel(benchmark::State& state) {
    const auto f = chirp(static_cast<std::size_t>(state.range(0)));
    const gkt::CubeEnumeration e(1, 512);
    for (auto _ : state) benchmark::DoNotOptimize(gkt::kernels::cube_functionals(f, e.cubes()));
}

gkt::Matrix table(int k, int n) {
    gkt::Rng rng(7);
    return rng.normal_matrix(k, n);
}

void BM_WeightedGramSerial(benchmark::State& state) {
    const auto t = table(static_cast<int>(state.range(0)), 30);
    const std::vector<double> w(static_cast<std::size_t>(t.rows()), 1.0 / static_cast<double>(t.rows()));
    for (auto _ : state) benchmark::DoNotOptimize(gkt::kernels::weighted_gram_serial(t, w));
}

void BM_WeightedGramParallel(benchmark::State& state) {
    const auto t = table(static_cast<int>(state.range(0)), 30);
    const std::vector<double> w(static_cast<std::size_t>(t.rows()), 1.0 / static_cast<double>(t.rows()));
    for (auto _ : state) benchmark::DoNotOptimize(gkt::kernels::weighted_gram(t, w));
}

}  // namespace

BENCHMARK(BM_CubeFunctionalsSerial)->Arg(1024)->Arg(4096);
BENCHMARK(BM_CubeFunctionalsParallel)->Arg(1024)->Arg(4096);
BENCHMARK(BM_WeightedGramSerial)->Arg(512)->Arg(4096);
BENCHMARK(BM_WeightedGramParallel)->Arg(512)->Arg(4096);

BENCHMARK_MAIN();
