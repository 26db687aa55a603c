#include <benchmark/benchmark.h>

#include "steercert/channels.hpp"
#include "steercert/kernels.hpp"
#include "steercert/lhs.hpp"
#include "steercert/qudit.hpp"
#include "steercert/scenarios.hpp"

using namespace steercert;

static void HermitianEig(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    Rng rng(7);
    const ComplexMatrix m = random_density_matrix(d, d, rng).matrix();
    for (auto _ : state) {
        auto eig = hermitian_eig(m);
        benchmark::DoNotOptimize(eig.eigenvalues.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(HermitianEig)->RangeMultiplier(2)->Range(2, 32)->Complexity();

static void SingleSystemRun(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    const DensityMatrix rho = DensityMatrix::maximally_mixed(d);
    const MubPair mub = fourier_basis(d);
    const QuantumChannel ch = depolarizing(d, 0.2);
    const ComplexMatrix u = ComplexMatrix::identity(d);
    for (auto _ : state) {
        SteeringRecord rec = run_single_system(rho, mub, ch, u);
        benchmark::DoNotOptimize(rec.setting(0).joint.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SingleSystemRun)->RangeMultiplier(2)->Range(2, 16)->Complexity();

static void KernelEvaluation(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    const SteeringRecord rec = symmetric_noise_record(d, 0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_sdu(rec).value);
        benchmark::DoNotOptimize(kernel_ent(rec).value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(KernelEvaluation)->RangeMultiplier(2)->Range(2, 64)->Complexity();

static void LhsStrategySample(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    const MubPair mub = fourier_basis(d);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const LhsStrategy s = random_strategy(d, d, seed++);
        benchmark::DoNotOptimize(kernel_sdu(simulate_lhs(s, mub)).value);
    }
}
BENCHMARK(LhsStrategySample)->Arg(2)->Arg(4)->Arg(8);

static void EquivalenceTrial(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(equivalence_sweep(d, 1, seed++));
}
BENCHMARK(EquivalenceTrial)->Arg(2)->Arg(3)->Arg(4);

static void NoiseThreshold(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const RobustnessPoint pt = noise_threshold(d);
        benchmark::DoNotOptimize(pt.p_ent);
    }
}
BENCHMARK(NoiseThreshold)->Arg(2)->Arg(16)->Arg(64);

int main(int argc, char** argv) {
    ::benchmark::Initialize(&argc, argv);
    if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    ::benchmark::RunSpecifiedBenchmarks();
    ::benchmark::Shutdown();
    return 0;
}
