#include <benchmark/benchmark.h>

#include "vatom/model.hpp"
#include "vatom/oracle.hpp"
#include "vatom/runner.hpp"
#include "vatom/squeezing.hpp"

namespace {

const vatom::SystemParams kStrong(1.0, 10.0, 0.5, 0.0);
const vatom::SystemParams kDetuned(1.0, 10.0, 1.0, 5.0);

void BM_Propagator(benchmark::State& state) {
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-3;
        benchmark::DoNotOptimize(vatom::propagator_g(kDetuned, vatom::Sign::plus, t));
    }
}
BENCHMARK(BM_Propagator);

void BM_EvolveAmplitudes(benchmark::State& state) {
    const auto init = vatom::preset_amplitudes(vatom::Preset::S2);
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-3;
        benchmark::DoNotOptimize(vatom::evolve_amplitudes(kDetuned, init, t));
    }
}
BENCHMARK(BM_EvolveAmplitudes);

void BM_FullRecord(benchmark::State& state) {
    const auto init = vatom::preset_amplitudes(vatom::Preset::S2);
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-3;
        benchmark::DoNotOptimize(vatom::make_record(vatom::evolve_amplitudes(kDetuned, init, t)));
    }
}
BENCHMARK(BM_FullRecord);

void BM_Fig1Line(benchmark::State& state) {
    vatom::RunConfig config;
    config.params = kStrong;
    config.initial = vatom::Preset::S1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(vatom::evolve(config));
    }
}
BENCHMARK(BM_Fig1Line)->Unit(benchmark::kMillisecond);

void BM_OdeOracle(benchmark::State& state) {
    const vatom::oracle::OdeConfig grid(1e-3, 20.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            vatom::oracle::ode_propagator(kDetuned, vatom::Sign::plus, grid));
    }
}
BENCHMARK(BM_OdeOracle)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
        return 1;
    }
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
