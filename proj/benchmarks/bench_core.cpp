#include <benchmark/benchmark.h>

#include "hexcut/boundary.hpp"
#include "hexcut/brute_force.hpp"
#include "hexcut/explicit_graph.hpp"
#include "hexcut/generators.hpp"
#include "hexcut/indices.hpp"
#include "hexcut/quotient.hpp"
#include "hexcut/weighted_tree.hpp"

namespace {

hexcut::BoundaryCycle circumcoronene_cycle(std::int64_t k) {
    hexcut::FamilySpec spec;
    spec.kind = hexcut::FamilySpec::Kind::Circumcoronene;
    spec.p1 = k;
    return hexcut::from_hexagons(hexcut::generate(spec));
}

void BM_QuotientTrees(benchmark::State& state) {
    hexcut::BoundaryCycle z = circumcoronene_cycle(state.range(0));
    for (auto _ : state) {
        auto trees = hexcut::quotient_trees(z);
        benchmark::DoNotOptimize(trees);
    }
    state.SetComplexityN(static_cast<std::int64_t>(z.length()));
}
BENCHMARK(BM_QuotientTrees)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oN);

void BM_ComputeAllFast(benchmark::State& state) {
    hexcut::BoundaryCycle z = circumcoronene_cycle(state.range(0));
    for (auto _ : state) {
        auto report = hexcut::compute_all(z);
        benchmark::DoNotOptimize(report);
    }
    state.SetComplexityN(static_cast<std::int64_t>(z.length()));
}
BENCHMARK(BM_ComputeAllFast)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oN);

void BM_ParseWord(benchmark::State& state) {
    hexcut::BoundaryWord word = hexcut::emit_word(circumcoronene_cycle(state.range(0)));
    for (auto _ : state) {
        auto cycle = hexcut::parse_word(word);
        benchmark::DoNotOptimize(cycle);
    }
    state.SetComplexityN(static_cast<std::int64_t>(word.steps.size()));
}
BENCHMARK(BM_ParseWord)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oN);

// The contrast case: definitional computation touches every vertex pair.
void BM_BruteForce(benchmark::State& state) {
    hexcut::FamilySpec spec;
    spec.kind = hexcut::FamilySpec::Kind::Circumcoronene;
    spec.p1 = state.range(0);
    hexcut::ExplicitGraph g = hexcut::build_graph(hexcut::generate(spec));
    for (auto _ : state) {
        auto indices = hexcut::brute_force_indices(g);
        benchmark::DoNotOptimize(indices);
    }
    state.SetComplexityN(g.vertex_count());
}
BENCHMARK(BM_BruteForce)->RangeMultiplier(2)->Range(2, 8)->Complexity();

void BM_EdgeSplits(benchmark::State& state) {
    hexcut::SplitMix64 rng(9);
    hexcut::WeightedTree t;
    const std::int64_t n = state.range(0);
    for (std::int64_t i = 0; i < n; ++i)
        t.vertex_weight.push_back(static_cast<std::int64_t>(rng.below(10)));
    for (std::int64_t i = 1; i < n; ++i)
        t.edges.push_back({static_cast<std::int32_t>(rng.below(i)), static_cast<std::int32_t>(i),
                           static_cast<std::int64_t>(rng.below(10))});
    for (auto _ : state) {
        auto splits = hexcut::edge_splits(t);
        benchmark::DoNotOptimize(splits);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_EdgeSplits)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oN);

} // namespace

BENCHMARK_MAIN();
