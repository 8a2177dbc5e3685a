#include "wcpswf/cpswf.hpp"
#include "wcpswf/tridiag.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace wcpswf;

static void BM_eig_tridiag(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    TridiagSym T;
    T.diag.resize(n);
    T.off.resize(n - 1);
    for (auto& d : T.diag) d = u(rng);
    for (auto& e : T.off) e = u(rng);
    for (auto _ : state) benchmark::DoNotOptimize(eig_tridiag(T));
}
BENCHMARK(BM_eig_tridiag)->Arg(16)->Arg(64)->Arg(256);

static void BM_eig_lowest6(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const TridiagSym T = build_matrix_even(0, 2, 0.0, 5.0, n);
    for (auto _ : state) benchmark::DoNotOptimize(eig_tridiag_lowest(T, 6));
}
BENCHMARK(BM_eig_lowest6)->Arg(64)->Arg(512);

static void BM_cpswf_solve(benchmark::State& state) {
    const double c = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cpswf_solve(Parity::Even, 0, 2, 0.0, c, 6));
}
BENCHMARK(BM_cpswf_solve)->Arg(1)->Arg(5)->Arg(20);
