#include "hyperheat/mild_solver.hpp"
#include "hyperheat/sample_fields.hpp"

#include <benchmark/benchmark.h>

using namespace hyperheat;

static void BM_DuhamelApply(benchmark::State& state) {
    const TorusGrid g(2, static_cast<std::size_t>(state.range(0)));
    SolverConfig c;
    c.T = 0.25;
    c.slabs = 64;
    c.octaves = 8;
    const ModelParams m{1.0, 3.0, 2};
    const RealField u0 = random_smooth_field(g, 6, 8.0, 1.0, 0.1);
    const Trajectory traj = etd_oracle(u0, c, m);
    for (auto _ : state) benchmark::DoNotOptimize(duhamel_apply(u0, traj, c, m));
}
BENCHMARK(BM_DuhamelApply)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_PicardSolve(benchmark::State& state) {
    const TorusGrid g(2, 32);
    SolverConfig c;
    c.T = 0.25;
    c.slabs = 64;
    c.octaves = 8;
    const RealField u0 = random_smooth_field(g, 7, 8.0, 1.0, 0.01);
    for (auto _ : state) {
        benchmark::DoNotOptimize(picard_solve(u0, c, ModelParams{1.0, 3.0, 2}, TimeWeight{0.0, 1.0, 0.25},
                                              SpaceParams{Family::B, 1.5, 2.0, 2.0, 1.5}));
    }
}
BENCHMARK(BM_PicardSolve)->Unit(benchmark::kMillisecond);
