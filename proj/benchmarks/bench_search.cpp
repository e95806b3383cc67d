#include <benchmark/benchmark.h>

#include <vector>

#include "degseq/characterize.hpp"
#include "degseq/graph.hpp"
#include "degseq/oracle.hpp"
#include "degseq/patterns.hpp"
#include "degseq/sequence.hpp"
#include "degseq/sigma.hpp"

using namespace degseq;

namespace {

DegreeSequence two_hub(int n) {
    std::vector<int> terms{n - 1, n - 1};
    terms.insert(terms.end(), static_cast<std::size_t>(n) - 2, 2);
    return DegreeSequence(std::move(terms));
}

// Hub plus two 3s over a sea of 2s; odd n keeps the sum even. A YES shape
// that makes the realizer thread the pattern through low demands.
DegreeSequence hub_threes(int n) {
    std::vector<int> terms{n - 1, 3, 3};
    terms.insert(terms.end(), static_cast<std::size_t>(n) - 3, 2);
    return DegreeSequence(std::move(terms));
}

void BM_CheckFamilyMember(benchmark::State& state) {
    const DegreeSequence seq = two_hub(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_k5_p4(seq).potential);
    }
}

void BM_CheckYes(benchmark::State& state) {
    const DegreeSequence seq = hub_threes(static_cast<int>(state.range(0)) | 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_k5_p4(seq).potential);
    }
}

void BM_RealizeSmall(benchmark::State& state) {
    const DegreeSequence seq = parse_sequence("6,3,3,2,2,2,2");
    for (auto _ : state) {
        benchmark::DoNotOptimize(realize_with_pattern(seq, k5_minus_p4()).edge_count());
    }
}

void BM_RealizeHub(benchmark::State& state) {
    const DegreeSequence seq = hub_threes(31);
    for (auto _ : state) {
        benchmark::DoNotOptimize(realize_with_pattern(seq, k5_minus_p4()).edge_count());
    }
}

void BM_EmbedK10(benchmark::State& state) {
    SimpleGraph k10(10);
    for (int u = 0; u < 10; ++u) {
        for (int v = u + 1; v < 10; ++v) k10.add_edge(u, v);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_embedding(k10, k5_minus_y4()).has_value());
    }
}

void BM_OracleK5(benchmark::State& state) {
    const DegreeSequence seq = parse_sequence("4^5");
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_potentially(seq, k5_minus_p4()));
    }
}

void BM_CrosscheckSweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long mismatches = 0;
        enumerate_graphic_sequences(n, [&](const DegreeSequence& seq) {
            if (check_k5_p4(seq).potential != oracle_potentially(seq, k5_minus_p4())) {
                ++mismatches;
            }
            return true;
        });
        benchmark::DoNotOptimize(mismatches);
    }
}

void BM_SigmaPredicate(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            compute_sigma(k5_minus_p4(), static_cast<int>(state.range(0)), Decider::kPredicate)
                .sigma_value);
    }
}

}  // namespace

BENCHMARK(BM_CheckFamilyMember)->Range(1 << 5, 1 << 14);
BENCHMARK(BM_CheckYes)->Range(1 << 5, 1 << 14);
BENCHMARK(BM_RealizeSmall);
BENCHMARK(BM_RealizeHub);
BENCHMARK(BM_EmbedK10);
BENCHMARK(BM_OracleK5);
BENCHMARK(BM_CrosscheckSweep)->Arg(5)->Arg(6);
BENCHMARK(BM_SigmaPredicate)->Arg(8)->Arg(10);
