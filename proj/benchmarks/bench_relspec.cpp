#include <benchmark/benchmark.h>

#include "relspec/oracle.hpp"
#include "relspec/specfun.hpp"
#include "relspec/spectrum.hpp"
#include "relspec/wavefunction.hpp"

namespace {

using namespace relspec;

PotentialSpec reference_spec() {
    PotentialSpec spec;
    spec.V0 = 1.0;
    spec.V1 = 0.5;
    spec.beta = 0.2;
    return spec;
}

void BM_Hyp2f1Terminating(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        double acc = 0.0;
        for (int i = 1; i < 64; ++i)
            acc += hyp2f1_terminating(n, 7.25, 3.5, i / 64.0);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_Hyp2f1Terminating)->Arg(2)->Arg(8)->Arg(32);

void BM_QuantizationResidual(benchmark::State& state) {
    const PotentialSpec spec = reference_spec();
    const UnitSystem units;
    const QuantumNumbers qn = QuantumNumbers::kg(2, 1);
    for (auto _ : state) {
        double acc = 0.0;
        for (int i = 1; i < 64; ++i)
            acc += quantization_residual(spec, units, qn, -0.9 + 1.7 * i / 64.0);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_QuantizationResidual);

void BM_SolveLevel(benchmark::State& state) {
    const PotentialSpec spec = reference_spec();
    const UnitSystem units;
    const QuantumNumbers qn = QuantumNumbers::kg(2, 1);
    for (auto _ : state) {
        const SolveResult res = solve_level(spec, units, qn);
        benchmark::DoNotOptimize(res.level->E);
    }
}
BENCHMARK(BM_SolveLevel);

void BM_NumerovSweep(benchmark::State& state) {
    ShootingProblem prob;
    prob.spec = reference_spec();
    prob.quantum = QuantumNumbers::kg(2, 1);
    prob.steps = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(numerov_sweep(prob, 0.85));
}
BENCHMARK(BM_NumerovSweep)->Arg(50000)->Arg(200000);

void BM_WavefunctionBuild(benchmark::State& state) {
    const PotentialSpec spec = reference_spec();
    const UnitSystem units;
    const SolveResult res = solve_level(spec, units, QuantumNumbers::kg(2, 1));
    for (auto _ : state) {
        const RadialFunction u = kg_wavefunction(spec, units, *res.level);
        benchmark::DoNotOptimize(u.norm_constant());
    }
}
BENCHMARK(BM_WavefunctionBuild);

}  // namespace

BENCHMARK_MAIN();
