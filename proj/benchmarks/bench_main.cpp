#include <benchmark/benchmark.h>

#include "treemate/bijections.hpp"
#include "treemate/counting.hpp"
#include "treemate/mating.hpp"
#include "treemate/walks.hpp"

using namespace treemate;

static void EnumerateRyWalks(benchmark::State& state) {
    auto ry = StepAlphabet::family("rY");
    int len = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto walks = enumerate_walks(ry, len, {0, 0}, {0, 0});
        benchmark::DoNotOptimize(walks);
    }
}
BENCHMARK(EnumerateRyWalks)->Arg(8)->Arg(12);

static void CountStraightWalks(benchmark::State& state) {
    auto straight = StepAlphabet::family("straight");
    int len = static_cast<int>(state.range(0));
    for (auto _ : state) {
        BigInt c = count_walks(straight, len, {0, 0}, {0, 0});
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(CountStraightWalks)->Arg(20)->Arg(40);

static void MateKreweras(benchmark::State& state) {
    Walk w = parse_walk_text("aabbccbac", StepAlphabet::family("kreweras"));
    for (auto _ : state) {
        MatedMap m = mate(w, ContractionRule::kreweras(), {});
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(MateKreweras);

static void CanonicalCodeLargeMap(benchmark::State& state) {
    // a long alternating straight walk mates into a map with many faces
    auto straight = StepAlphabet::family("straight");
    int pairs = static_cast<int>(state.range(0));
    std::vector<Step> steps;
    for (int i = 0; i < pairs; ++i) {
        steps.push_back({1, 0});
        steps.push_back({-1, 0});
    }
    MatedMap m = mate(Walk{straight, {0, 0}, steps}, ContractionRule::identify_uz(), {});
    for (auto _ : state) {
        auto code = m.map.canonical_code();
        benchmark::DoNotOptimize(code);
    }
}
BENCHMARK(CanonicalCodeLargeMap)->Arg(64)->Arg(256);

static void SchnyderRoundTrip(benchmark::State& state) {
    Walk w = parse_walk_text("aabbacabaccabacbbaacbbbacccc", StepAlphabet::family("schnyder"));
    for (auto _ : state) {
        SchnyderWood wood = tandem_to_schnyder(w);
        Walk back = schnyder_to_tandem(wood);
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(SchnyderRoundTrip);

BENCHMARK_MAIN();
