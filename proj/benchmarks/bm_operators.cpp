#include <benchmark/benchmark.h>

#include "twinga/functions.hpp"
#include "twinga/ga.hpp"
#include "twinga/twin.hpp"

namespace {

using namespace twinga;

void BM_DecodeGenome(benchmark::State& state) {
    const auto spec = preset("sphere");
    Rng rng(1);
    const auto c = Chromosome::random(spec.chromosome_length(), rng);
    for (auto _ : state) benchmark::DoNotOptimize(decode_genome(c, spec));
}
BENCHMARK(BM_DecodeGenome);

void BM_Evaluate(benchmark::State& state) {
    const auto spec = preset(static_cast<FunctionId>(state.range(0)));
    Rng rng(2);
    const auto c = Chromosome::random(spec.chromosome_length(), rng);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(c, spec));
    state.SetLabel(spec.name);
}
BENCHMARK(BM_Evaluate)->DenseRange(0, 4);

void BM_Crossover(benchmark::State& state) {
    Rng rng(3);
    const auto len = static_cast<std::size_t>(state.range(0));
    const auto a = Chromosome::random(len, rng);
    const auto b = Chromosome::random(len, rng);
    for (auto _ : state) benchmark::DoNotOptimize(single_point_crossover(a, b, rng));
}
BENCHMARK(BM_Crossover)->Arg(20)->Arg(60)->Arg(1024);

void BM_Mutate(benchmark::State& state) {
    Rng rng(4);
    const auto c = Chromosome::random(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(mutate(c, 0.01, rng));
}
BENCHMARK(BM_Mutate)->Arg(20)->Arg(60)->Arg(1024);

void BM_TwinMate(benchmark::State& state) {
    Rng rng(5);
    const auto len = static_cast<std::size_t>(state.range(0));
    const auto p1 = Chromosome::random(len, rng);
    const auto p2 = Chromosome::random(len, rng);
    const auto [child, sibling] = single_point_crossover_at(p1, p2, len / 2);
    const auto h1 = unequal_positions(child, p1);
    const auto h2 = unequal_positions(child, p2);
    for (auto _ : state) benchmark::DoNotOptimize(make_twin_mate(child, h1, h2, 0.5, rng));
}
BENCHMARK(BM_TwinMate)->Arg(20)->Arg(60)->Arg(1024);

void BM_AdaptivePTwin(benchmark::State& state) {
    const TwinParams params;
    double f = 0.6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(adaptive_p_twin(f, 0.55, params));
        f = f > 0.9 ? 0.6 : f + 0.001;
    }
}
BENCHMARK(BM_AdaptivePTwin);

}  // namespace
