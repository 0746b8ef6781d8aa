#include <benchmark/benchmark.h>

#include "sdlab/kms.hpp"
#include "sdlab/linalg.hpp"
#include "sdlab/numrange.hpp"
#include "sdlab/random.hpp"

using namespace sdlab;

static void BM_SpechtWords(benchmark::State& state) {
    const int degree = int(state.range(0));
    for (auto _ : state) {
        auto words = kms::specht_words(4, degree);
        benchmark::DoNotOptimize(words);
    }
}
BENCHMARK(BM_SpechtWords)->Arg(8)->Arg(12)->Arg(14);

static void BM_NkOracle(benchmark::State& state) {
    Rng rng(5);
    const ComplexMatrix a = direct_sum(jordan_block(3, 0.0), rng.nonsingular(3));
    for (auto _ : state) {
        auto counts = kms::nk_oracle(std::size_t(state.range(0)), a, 1e-8);
        benchmark::DoNotOptimize(counts);
    }
}
BENCHMARK(BM_NkOracle)->Arg(3)->Arg(6);

static void BM_BoundarySweep(benchmark::State& state) {
    Rng rng(9);
    const ComplexMatrix k = kms::build({4, rng.nonsingular(2)});
    const int samples = int(state.range(0));
    for (auto _ : state) {
        auto b = numrange::boundary(k, samples);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_BoundarySweep)->Arg(90)->Arg(720)->Unit(benchmark::kMillisecond);

static void BM_LemdetResidual(benchmark::State& state) {
    Rng rng(13);
    const ComplexMatrix a = rng.matrix(2, 2);
    const std::vector<double> ys = {-2.0, -1.0, 0.0, 1.0, 2.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(numrange::lemdet_residual(std::size_t(state.range(0)), a, ys));
    }
}
BENCHMARK(BM_LemdetResidual)->Arg(3)->Arg(5);
