#include <benchmark/benchmark.h>

#include <vector>

#include "degseq/graphicality.hpp"
#include "degseq/sequence.hpp"

using namespace degseq;

namespace {

// (n-1, n-1, 2^(n-2)): the extremal witness shape, worst case for the
// inequality scan since the split point crosses the whole tail.
DegreeSequence two_hub(int n) {
    std::vector<int> terms{n - 1, n - 1};
    terms.insert(terms.end(), static_cast<std::size_t>(n) - 2, 2);
    return DegreeSequence(std::move(terms));
}

void BM_ErdosGallaiTwoHub(benchmark::State& state) {
    const DegreeSequence seq = two_hub(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_graphic_erdos_gallai(seq));
    }
    state.SetComplexityN(state.range(0));
}

void BM_ErdosGallaiRegular(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DegreeSequence seq{std::vector<int>(static_cast<std::size_t>(n), 4)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_graphic_erdos_gallai(seq));
    }
    state.SetComplexityN(state.range(0));
}

void BM_LayOffDecider(benchmark::State& state) {
    const DegreeSequence seq = two_hub(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_graphic_lay_off(seq));
    }
}

void BM_HavelHakimi(benchmark::State& state) {
    const DegreeSequence seq = two_hub(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(havel_hakimi_realize(seq).edge_count());
    }
}

void BM_SmallDegreeShortcut(benchmark::State& state) {
    std::vector<int> terms(static_cast<std::size_t>(state.range(0)), 2);
    terms.back() = 1;
    terms[terms.size() - 2] = 1;
    const DegreeSequence seq{std::move(terms)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_graphic_small_degree(seq));
    }
}

}  // namespace

BENCHMARK(BM_ErdosGallaiTwoHub)->Range(1 << 10, 1 << 17)->Complexity(benchmark::oN);
BENCHMARK(BM_ErdosGallaiRegular)->Range(1 << 10, 1 << 17)->Complexity(benchmark::oN);
BENCHMARK(BM_LayOffDecider)->Range(1 << 6, 1 << 10);
BENCHMARK(BM_HavelHakimi)->Range(1 << 6, 1 << 9);
BENCHMARK(BM_SmallDegreeShortcut)->Range(1 << 10, 1 << 17);

BENCHMARK_MAIN();
