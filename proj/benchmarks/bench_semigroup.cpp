#include "hyperheat/grid.hpp"
#include "hyperheat/sample_fields.hpp"
#include "hyperheat/semigroup.hpp"

#include <benchmark/benchmark.h>

using namespace hyperheat;

static void BM_ApplySemigroup(benchmark::State& state) {
    const TorusGrid g(2, static_cast<std::size_t>(state.range(0)));
    const SpectralField f = forward_transform(random_smooth_field(g, 3, 20.0));
    const ModelParams m{static_cast<double>(state.range(1)), 3.0, 2};
    for (auto _ : state) benchmark::DoNotOptimize(apply_semigroup(f, 0.01, m));
}
BENCHMARK(BM_ApplySemigroup)->Args({64, 1})->Args({64, 3})->Args({256, 1});

static void BM_SynthesizeKernel(benchmark::State& state) {
    const TorusGrid g(1, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(synthesize_kernel(0.01, g, ModelParams{2.0, 3.0, 1}));
}
BENCHMARK(BM_SynthesizeKernel)->Arg(256)->Arg(4096);
