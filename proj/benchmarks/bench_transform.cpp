#include "hyperheat/grid.hpp"
#include "hyperheat/sample_fields.hpp"

#include <benchmark/benchmark.h>

using namespace hyperheat;

static void BM_ForwardTransform2D(benchmark::State& state) {
    const TorusGrid g(2, static_cast<std::size_t>(state.range(0)));
    const RealField f = random_smooth_field(g, 1, 20.0);
    for (auto _ : state) benchmark::DoNotOptimize(forward_transform(f));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_ForwardTransform2D)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

static void BM_RoundTrip1D(benchmark::State& state) {
    const TorusGrid g(1, static_cast<std::size_t>(state.range(0)));
    const RealField f = random_smooth_field(g, 2, 50.0);
    for (auto _ : state) benchmark::DoNotOptimize(inverse_transform(forward_transform(f)));
}
BENCHMARK(BM_RoundTrip1D)->Arg(1024)->Arg(16384);
