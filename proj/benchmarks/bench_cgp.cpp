#include "wcpswf/cgp.hpp"
#include "wcpswf/quadrature.hpp"

#include <benchmark/benchmark.h>

using namespace wcpswf;

static void BM_cgp_radial_value(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CgpSpec spec{n, 2, 1, 0.5};
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-6;
        benchmark::DoNotOptimize(cgp_radial_value(spec, t, true));
    }
}
BENCHMARK(BM_cgp_radial_value)->Arg(4)->Arg(20)->Arg(60);

static void BM_cgp_radial_build(benchmark::State& state) {
    const CgpSpec spec{static_cast<int>(state.range(0)), 2, 1, 0.5};
    for (auto _ : state) benchmark::DoNotOptimize(cgp_radial(spec, true));
}
BENCHMARK(BM_cgp_radial_build)->Arg(8)->Arg(40);

static void BM_gauss_jacobi_rule(benchmark::State& state) {
    const int npts = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gauss_jacobi_rule(npts, 0.5, 1.0));
}
BENCHMARK(BM_gauss_jacobi_rule)->Arg(20)->Arg(100);
