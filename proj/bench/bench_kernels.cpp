// OpenMP kernels against their serial reference, plus the property suite in both modes.

#include <benchmark/benchmark.h>

#include "qreflect/commands.hpp"
#include "qreflect/kernels.hpp"
#include "qreflect/maps.hpp"
#include "qreflect/states.hpp"

using namespace qreflect;

namespace {

template <bool Parallel>
void BM_Expectations(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DensityState rho = random_density(n, MixedDirichlet{}, 1);
    std::vector<double> out(stokes_size(n));
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::pauli_expectations(rho.matrix(), n, out);
        } else {
            kernels::serial::pauli_expectations(rho.matrix(), n, out);
        }
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void BM_Synthesis(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const StokesTensor s = to_stokes(random_density(n, MixedDirichlet{}, 2));
    CMatrix rho;
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::pauli_synthesis(s.values(), n, rho);
        } else {
            kernels::serial::pauli_synthesis(s.values(), n, rho);
        }
        benchmark::DoNotOptimize(rho.data());
    }
}

template <bool Parallel>
void BM_Signs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const StokesTensor s = to_stokes(random_density(n, MixedDirichlet{}, 3));
    const SignMask mask = mask_total_reflection(n, QubitSet::all(n));
    std::vector<double> out(stokes_size(n));
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::apply_signs(s.values(), mask.signs(), out);
        } else {
            kernels::serial::apply_signs(s.values(), mask.signs(), out);
        }
        benchmark::DoNotOptimize(out.data());
    }
}

void BM_PropertySuite(benchmark::State& state) {
    commands::PropertyOptions options;
    options.trials = static_cast<int>(state.range(0));
    options.execution = state.range(1) ? commands::Execution::Parallel : commands::Execution::Serial;
    for (auto _ : state) benchmark::DoNotOptimize(commands::property_suite(options).passed);
}

}  // namespace

BENCHMARK(BM_Expectations<false>)->DenseRange(4, 6)->Name("expectations/serial");
BENCHMARK(BM_Expectations<true>)->DenseRange(4, 6)->Name("expectations/openmp");
BENCHMARK(BM_Synthesis<false>)->DenseRange(4, 6)->Name("synthesis/serial");
BENCHMARK(BM_Synthesis<true>)->DenseRange(4, 6)->Name("synthesis/openmp");
BENCHMARK(BM_Signs<false>)->DenseRange(4, 6)->Name("signs/serial");
BENCHMARK(BM_Signs<true>)->DenseRange(4, 6)->Name("signs/openmp");
BENCHMARK(BM_PropertySuite)->ArgNames({"trials", "parallel"})->Args({100, 0})->Args({100, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
