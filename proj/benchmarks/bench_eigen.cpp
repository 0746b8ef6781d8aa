#include <benchmark/benchmark.h>

#include "sdlab/linalg.hpp"
#include "sdlab/random.hpp"

using namespace sdlab;

static void BM_HermitianEigenvalues(benchmark::State& state) {
    Rng rng(42);
    const ComplexMatrix h = rng.hermitian(std::size_t(state.range(0)));
    for (auto _ : state) {
        auto vals = hermitian_eigenvalues(h);
        benchmark::DoNotOptimize(vals);
    }
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_HermitianEigenFull(benchmark::State& state) {
    Rng rng(42);
    const ComplexMatrix h = rng.hermitian(std::size_t(state.range(0)));
    for (auto _ : state) {
        auto eig = hermitian_eigen(h);
        benchmark::DoNotOptimize(eig);
    }
}
BENCHMARK(BM_HermitianEigenFull)->Arg(8)->Arg(16)->Arg(32);

static void BM_SingularValues(benchmark::State& state) {
    Rng rng(7);
    const ComplexMatrix x = rng.matrix(std::size_t(state.range(0)), std::size_t(state.range(0)));
    for (auto _ : state) {
        auto sv = singular_values(x);
        benchmark::DoNotOptimize(sv);
    }
}
BENCHMARK(BM_SingularValues)->Arg(8)->Arg(16)->Arg(32);

static void BM_Inertia(benchmark::State& state) {
    Rng rng(11);
    const ComplexMatrix h = rng.hermitian(std::size_t(state.range(0)));
    for (auto _ : state) {
        auto in = inertia(h);
        benchmark::DoNotOptimize(in);
    }
}
BENCHMARK(BM_Inertia)->Arg(8)->Arg(18);
