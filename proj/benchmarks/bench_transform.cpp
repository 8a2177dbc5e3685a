#include "wcpswf/bessel.hpp"
#include "wcpswf/cpswf.hpp"
#include "wcpswf/transform.hpp"

#include <benchmark/benchmark.h>

using namespace wcpswf;

static void BM_bessel_series(benchmark::State& state) {
    double x = 0.5;
    for (auto _ : state) {
        x += 1e-9;
        benchmark::DoNotOptimize(bessel_j(2.5, x));
    }
}
BENCHMARK(BM_bessel_series);

static void BM_bessel_backward(benchmark::State& state) {
    double x = 25.0;
    for (auto _ : state) {
        x += 1e-9;
        benchmark::DoNotOptimize(bessel_j(2.5, x));
    }
}
BENCHMARK(BM_bessel_backward);

static void BM_finite_fourier_closed(benchmark::State& state) {
    const auto pairs = cpswf_solve(Parity::Even, 0, 2, 0.0, 1.0, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(finite_fourier_closed(pairs[0], 1.0, {0.3, 0.4}));
}
BENCHMARK(BM_finite_fourier_closed);

static void BM_eigen_quality(benchmark::State& state) {
    const auto pairs = cpswf_solve(Parity::Even, 0, 2, 0.0, 1.0, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(eigen_quality(pairs[0], 1.0, 16, 24));
}
BENCHMARK(BM_eigen_quality);
