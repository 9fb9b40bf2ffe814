// Serial vs OpenMP timing for the data-parallel kernels: the orbit sweep,
// the gap-traversal grid, the multi-start exponent estimate, and the
// semiconjugacy residual batch.

#include <benchmark/benchmark.h>

#include "sturmlab/cocycle.hpp"
#include "sturmlab/lab.hpp"

using namespace sturmlab;

namespace {

const Lab& shared_lab() {
    static Lab lab = [] {
        RunConfig cfg;
        cfg.period_max = 10;
        return Lab::build(cfg);
    }();
    return lab;
}

void BM_sweep(benchmark::State& state) {
    const Lab& lab = shared_lab();
    auto orbits = enumerate_orbits(10);
    bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        auto recs = parallel ? sweep_orbits(*lab.assembled, orbits, true)
                             : sweep_orbits_serial(*lab.assembled, orbits);
        benchmark::DoNotOptimize(recs);
    }
    state.SetLabel(parallel ? "omp" : "serial");
}

void BM_traversal_grid(benchmark::State& state) {
    const Lab& lab = shared_lab();
    bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        long cells = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : cells) if (parallel)
        for (long i = 0; i < 36; ++i) {
            TraversalReport r = verify_gap_traversal(*lab.assembled, i / 6, i % 6, 8);
            cells += static_cast<long>(r.samples.size());
        }
        benchmark::DoNotOptimize(cells);
    }
    state.SetLabel(parallel ? "omp" : "serial");
}

void BM_multistart_exponent(benchmark::State& state) {
    const Lab& lab = shared_lab();
    CocycleSpec spec = herman_cocycle(lab.herman, lab.alpha);
    double alpha_d = lab.alpha->realize(64).mid_double();
    bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        double acc = 0;
#pragma omp parallel for schedule(static) reduction(+ : acc) if (parallel)
        for (long s = 0; s < 16; ++s) {
            double x0 = uniform_from_index(7, static_cast<uint64_t>(s));
            acc += birkhoff_exponent_fast(spec.gen_fast, alpha_d, x0, 100000).value;
        }
        benchmark::DoNotOptimize(acc);
    }
    state.SetLabel(parallel ? "omp" : "serial");
}

void BM_residual_batch(benchmark::State& state) {
    const Lab& lab = shared_lab();
    bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        auto rows = parallel ? semiconjugacy_residuals(*lab.gaps, 64, 11, true)
                             : semiconjugacy_residuals_serial(*lab.gaps, 64, 11);
        benchmark::DoNotOptimize(rows);
    }
    state.SetLabel(parallel ? "omp" : "serial");
}

}  // namespace

BENCHMARK(BM_sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_traversal_grid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multistart_exponent)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_residual_batch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
