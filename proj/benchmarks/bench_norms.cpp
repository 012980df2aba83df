#include "hyperheat/grid.hpp"
#include "hyperheat/littlewood_paley.hpp"
#include "hyperheat/sample_fields.hpp"

#include <benchmark/benchmark.h>

using namespace hyperheat;

static void BM_BesovNorm(benchmark::State& state) {
    const TorusGrid g(2, static_cast<std::size_t>(state.range(0)));
    const DyadicDecomposition d = build_decomposition(g);
    const SpectralField f = forward_transform(random_smooth_field(g, 4, 1e9, 0.5));
    const SpaceParams space{Family::B, 1.5, 3.0, 2.0, 1.5};
    for (auto _ : state) benchmark::DoNotOptimize(a_norm(f, space, d));
}
BENCHMARK(BM_BesovNorm)->Arg(32)->Arg(64)->Arg(128);

static void BM_TriebelLizorkinNorm(benchmark::State& state) {
    const TorusGrid g(2, static_cast<std::size_t>(state.range(0)));
    const DyadicDecomposition d = build_decomposition(g);
    const SpectralField f = forward_transform(random_smooth_field(g, 5, 1e9, 0.5));
    const SpaceParams space{Family::F, 1.5, 3.0, 2.0, 1.5};
    for (auto _ : state) benchmark::DoNotOptimize(a_norm(f, space, d));
}
BENCHMARK(BM_TriebelLizorkinNorm)->Arg(32)->Arg(64);
