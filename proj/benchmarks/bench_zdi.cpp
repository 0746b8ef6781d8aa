#include <benchmark/benchmark.h>

#include "sdlab/companion.hpp"
#include "sdlab/dilation.hpp"
#include "sdlab/kms.hpp"
#include "sdlab/random.hpp"

using namespace sdlab;

namespace {

companion::GeneralizedCompanionSpec bench_spec(std::size_t m, std::size_t n) {
    Rng rng(42);
    companion::GeneralizedCompanionSpec spec;
    spec.m = m;
    spec.n = n;
    for (std::size_t j = 0; j + 1 < m; ++j) spec.diag_blocks.push_back(rng.nonsingular(n));
    for (std::size_t j = 0; j < m; ++j) spec.bottom_blocks.push_back(rng.matrix(n, n, 0.7));
    return spec;
}

} // namespace

static void BM_IgeqAt(benchmark::State& state) {
    const ComplexMatrix c = companion::build(bench_spec(4, std::size_t(state.range(0))));
    double theta = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dilation::igeq_at(c, theta));
        theta += 0.001;
    }
}
BENCHMARK(BM_IgeqAt)->Arg(1)->Arg(2)->Arg(3);

static void BM_ZdiGrid(benchmark::State& state) {
    const ComplexMatrix c = companion::build(bench_spec(4, 2));
    const int grid = int(state.range(0));
    for (auto _ : state) {
        auto r = dilation::zdi(c, grid);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ZdiGrid)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

static void BM_ZdiKmsClosedForm(benchmark::State& state) {
    Rng rng(3);
    const ComplexMatrix a = rng.nonsingular(std::size_t(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kms::zdi_kms(5, a, 1e-8));
    }
}
BENCHMARK(BM_ZdiKmsClosedForm)->Arg(1)->Arg(2)->Arg(3);
