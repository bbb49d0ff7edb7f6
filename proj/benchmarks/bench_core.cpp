#include <benchmark/benchmark.h>

#include "skewexp/circuit.hpp"
#include "skewexp/expm.hpp"
#include "skewexp/matgen.hpp"
#include "skewexp/optimizer.hpp"

using namespace skewexp;

static void BM_ExpmPade(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const AntisymMatrix a = random_antisym(n, MatrixFamily::UNIFORM_REAL, 1);
    for (auto _ : state) benchmark::DoNotOptimize(expm_pade(a.to_complex()));
}
BENCHMARK(BM_ExpmPade)->DenseRange(2, 6);

static void BM_AssembleU(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ParamVector p = random_params(n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(assemble_u(p));
}
BENCHMARK(BM_AssembleU)->DenseRange(2, 6);

static void BM_LossAntisym(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const AntisymMatrix target = random_antisym(n, MatrixFamily::UNIFORM_REAL, 2);
    const ParamVector p = random_params(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(loss_antisym(p, target));
}
BENCHMARK(BM_LossAntisym)->DenseRange(2, 6);

BENCHMARK_MAIN();
