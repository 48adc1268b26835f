#include <benchmark/benchmark.h>

#include "hplus/hyperoctahedral.hpp"
#include "hplus/partition.hpp"
#include "hplus/weingarten.hpp"

namespace {

void BM_EnumerateNc(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hplus::enumerate_nc(k, hplus::Flavor::H));
}
BENCHMARK(BM_EnumerateNc)->DenseRange(8, 14, 2);

void BM_WeingartenInverse(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto pair = hplus::gram_matrix(k, 12, hplus::Flavor::H);
    for (auto _ : state) benchmark::DoNotOptimize(hplus::inverse(pair.gram));
    state.counters["dim"] = static_cast<double>(pair.basis.size());
}
BENCHMARK(BM_WeingartenInverse)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CharacterMoment(benchmark::State& state) {
    const long n = state.range(0);
    hplus::weingarten_matrix(8, n, hplus::Flavor::H);
    for (auto _ : state) benchmark::DoNotOptimize(hplus::character_moment(8, n, n / 2, hplus::Flavor::H));
}
BENCHMARK(BM_CharacterMoment)->Arg(16)->Arg(256);

void BM_SampleCharacterLaw(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hplus::sample_character_law(n, n / 2, 1, 100000, 1));
    state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_SampleCharacterLaw)->Arg(10)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
