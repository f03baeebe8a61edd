#include <benchmark/benchmark.h>

#include "twinga/experiment.hpp"

namespace {

using namespace twinga;

void BM_StepGeneration(benchmark::State& state) {
    GaConfig config = preset_config(preset("sphere"), state.range(0) ? Mode::ATGA : Mode::SGA);
    Rng rng(7);
    const Population pop = initial_population(config, rng);
    for (auto _ : state) benchmark::DoNotOptimize(step_generation(pop, config, rng));
    state.SetLabel(std::string(to_string(config.mode)));
}
BENCHMARK(BM_StepGeneration)->Arg(0)->Arg(1);

// One full Table I trial per preset, both modes.
void BM_SingleTrial(benchmark::State& state) {
    GaConfig config =
        preset_config(preset(static_cast<FunctionId>(state.range(0))), state.range(1) ? Mode::ATGA : Mode::SGA);
    int trial = 0;
    for (auto _ : state) benchmark::DoNotOptimize(run_trial(config, trial++));
    state.SetLabel(config.benchmark.name + "/" + std::string(to_string(config.mode)));
}
BENCHMARK(BM_SingleTrial)->ArgsProduct({{0, 1, 2, 3, 4}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_RunTrials(benchmark::State& state) {
    const GaConfig config = preset_config(preset("schwefel"), Mode::ATGA);
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_trials(config, 25, workers));
}
BENCHMARK(BM_RunTrials)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
