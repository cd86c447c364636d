// Microbenchmarks for the hot paths: dense matrix algebra, the spectral
// oracle, the series-based certifiers, and the phase-space star product.

#include <benchmark/benchmark.h>

#include "qsc/criteria.hpp"
#include "qsc/generate.hpp"
#include "qsc/moyal.hpp"
#include "qsc/spectral.hpp"
#include "qsc/wigner.hpp"

#include <random>

using namespace qsc;

namespace {

ComplexMatrix density_fixture(std::size_t dim, std::uint64_t salt = 1) {
    std::mt19937_64 rng(dim * 7919 + salt);
    return random_density(dim, rng);
}

} // namespace

static void BM_MatMul(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = density_fixture(dim);
    const ComplexMatrix b = density_fixture(dim, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mat_mul(a, b));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MatMul)->Arg(16)->Arg(32)->Arg(64)->Arg(128)->Complexity();

static void BM_Eigh(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = density_fixture(dim);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigh(a));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigh)->Arg(16)->Arg(32)->Arg(64)->Complexity();

static void BM_SqrtSquareTrace(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = density_fixture(dim);
    ToleranceConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(criterion_sqrt_square_trace(a, cfg));
    }
}
BENCHMARK(BM_SqrtSquareTrace)->Arg(8)->Arg(16)->Arg(32);

static void BM_TraceSqrtSquare(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = density_fixture(dim);
    ToleranceConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(criterion_trace_sqrt_square(a, cfg));
    }
}
BENCHMARK(BM_TraceSqrtSquare)->Arg(8)->Arg(16)->Arg(32);

static void BM_BinomialSums(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = density_fixture(dim);
    ToleranceConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(criterion_binomial_sums(a, cfg));
    }
}
BENCHMARK(BM_BinomialSums)->Arg(8)->Arg(16)->Arg(32);

static void BM_PsdOracle(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = density_fixture(dim);
    for (auto _ : state) {
        benchmark::DoNotOptimize(psd_oracle(a, 1e-8));
    }
}
BENCHMARK(BM_PsdOracle)->Arg(8)->Arg(16)->Arg(32);

static void BM_StarProduct(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const WignerGrid w = fock_wigner(make_grid(-8.0, 8.0, -8.0, 8.0, 1.0, n, n), 1);
    StarEngine engine(w);
    const BandSpectrum s = engine.analyze(w);
    for (auto _ : state) {
        benchmark::DoNotOptimize(engine.star(s, s));
    }
}
BENCHMARK(BM_StarProduct)->Arg(64)->Arg(128)->Arg(256);

static void BM_SpectrumAnalyze(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const WignerGrid w = fock_wigner(make_grid(-8.0, 8.0, -8.0, 8.0, 1.0, n, n), 1);
    StarEngine engine(w);
    for (auto _ : state) {
        benchmark::DoNotOptimize(engine.analyze(w));
    }
}
BENCHMARK(BM_SpectrumAnalyze)->Arg(64)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
