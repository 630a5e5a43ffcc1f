#include <benchmark/benchmark.h>

#include "rectiforce/force.hpp"
#include "rectiforce/kernels.hpp"
#include "rectiforce/spectral.hpp"

using namespace rectiforce;

namespace {

const MaterialModel drude = make_model(MaterialKind::drude);

void BM_ThermalKernel(benchmark::State& state)
{
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(thermal_kernel(drude, ConductivityPart::full, x, 150.0, 1.5, 1.25));
        x = x < 10.0 ? x * 1.0001 : 0.5;
    }
}
BENCHMARK(BM_ThermalKernel);

void BM_QuantumKernelImag(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(quantum_kernel_imag(drude, 3.0, 150.0, 1.5));
    }
}
BENCHMARK(BM_QuantumKernelImag);

void BM_QIntegralThermal(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(q_integral(drude, ConductivityPart::full, 1.0, 1.5,
                                            Occupation::thermal(1.25), Axis::real, QuadratureSpec{}));
    }
}
BENCHMARK(BM_QIntegralThermal);

void BM_ForceThermal(benchmark::State& state)
{
    const double zeta = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(force_thermal(drude, zeta, 1.25));
    }
}
BENCHMARK(BM_ForceThermal)->Arg(2)->Arg(15)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_ForceQuantum(benchmark::State& state)
{
    const double zeta = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(force_quantum(drude, zeta));
    }
}
BENCHMARK(BM_ForceQuantum)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ForceIdeal(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(force_ideal(1.0, 1.25, 210.0));
    }
}
BENCHMARK(BM_ForceIdeal);

}  // namespace
BENCHMARK_MAIN();
