#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "hexcut/errors.hpp"
#include "hexcut/weighted_tree.hpp"

using namespace hexcut;
using namespace hexcut::testing;

namespace {

WeightedTree k2(std::int64_t wa, std::int64_t wb, std::int64_t we) {
    WeightedTree t;
    t.vertex_weight = {wa, wb};
    t.edges = {{0, 1, we}};
    return t;
}

WeightedTree path3(std::int64_t wa, std::int64_t wb, std::int64_t wc, std::int64_t e1,
                   std::int64_t e2) {
    WeightedTree t;
    t.vertex_weight = {wa, wb, wc};
    t.edges = {{0, 1, e1}, {1, 2, e2}};
    return t;
}

} // namespace

TEST_CASE("edge_splits: hand examples") {
    auto s = edge_splits(k2(5, 5, 3));
    CHECK(s[0].n1 == 5);
    CHECK(s[0].n2 == 5);
    CHECK(s[0].m1 == 0);
    CHECK(s[0].m2 == 0);

    auto p = edge_splits(path3(3, 4, 3, 2, 2));
    CHECK(p[0].n1 == 3);
    CHECK(p[0].n2 == 7);
    CHECK(p[0].m1 == 0);
    CHECK(p[0].m2 == 2);

    WeightedTree star;
    star.vertex_weight = {1, 1, 1, 1};
    star.edges = {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}};
    for (const EdgeSplit& e : edge_splits(star)) {
        CHECK(e.n2 == 1);
        CHECK(e.n1 == 3);
        CHECK(e.m2 == 0);
        CHECK(e.m1 == 2);
    }
}

TEST_CASE("primitive examples") {
    CHECK(szeged_weighted(k2(5, 5, 3)) == 75);
    CHECK(szeged_weighted(path3(3, 4, 3, 2, 2)) == 84);
    WeightedTree lone;
    lone.vertex_weight = {7};
    CHECK(szeged_weighted(lone) == 0);
    CHECK(total_szeged(lone) == 0);

    CHECK(wiener_vertex(k2(4, 4, 1)) == 16);
    CHECK(wiener_vertex(path3(2, 3, 2, 1, 1)) == 20);
    WeightedTree zeros = path3(0, 0, 0, 1, 1);
    CHECK(wiener_vertex(zeros) == 0);
    CHECK(pi_vertex(zeros) == 0);

    CHECK(wiener_edge(k2(1, 1, 5)) == 0);
    WeightedTree path4;
    path4.vertex_weight = {0, 0, 0, 0};
    path4.edges = {{0, 1, 2}, {1, 2, 3}, {2, 3, 2}};
    CHECK(wiener_edge(path4) == 4);
    CHECK(wiener_edge(path3(0, 0, 0, 2, 2)) == 0);

    CHECK(wiener_ve(k2(4, 4, 3)) == 0);
    CHECK(wiener_ve(path3(2, 3, 2, 2, 2)) == 8);
    WeightedTree star;
    star.vertex_weight = {5, 0, 0, 0};
    star.edges = {{0, 1, 3}, {0, 2, 1}, {0, 3, 9}};
    CHECK(wiener_ve(star) == 0);

    CHECK(total_szeged(k2(4, 4, 3)) == 48);
    CHECK(total_szeged(path3(2, 3, 2, 2, 2)) == 56);

    CHECK(pi_edge(path3(0, 0, 0, 2, 2)) == 8);
    CHECK(pi_edge(k2(1, 1, 7)) == 0);
    CHECK(pi_edge(path4) == 2 * 5 + 3 * 4 + 2 * 5);

    CHECK(pi_vertex(k2(4, 4, 3)) == 24);
    CHECK(pi_vertex(path3(2, 3, 2, 2, 2)) == 28);
}

TEST_CASE("pi_edge of a uniform path") {
    WeightedTree t;
    t.vertex_weight = {0, 0, 0, 0};
    t.edges = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}};
    CHECK(pi_edge(t) == 6);
}

TEST_CASE("split identities on random trees") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        WeightedTree t = random_weighted_tree(rng, 16, 9);
        std::int64_t total_w = std::accumulate(t.vertex_weight.begin(), t.vertex_weight.end(),
                                               std::int64_t{0});
        std::int64_t total_wp = 0;
        for (const auto& e : t.edges) total_wp += e.weight;
        std::size_t ei = 0;
        for (const EdgeSplit& s : edge_splits(t)) {
            CHECK(s.n1 + s.n2 == total_w);
            CHECK(s.m1 + s.m2 + t.edges[ei].weight == total_wp);
            ++ei;
        }
    }
}

TEST_CASE("fast primitives equal the definitional oracle") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 250; ++trial) {
        WeightedTree t = random_weighted_tree(rng);
        CAPTURE(trial);
        CHECK(szeged_weighted(t) == definitional_oracle(t, TreeIndex::Szeged));
        CHECK(wiener_vertex(t) == definitional_oracle(t, TreeIndex::WienerVertex));
        CHECK(wiener_edge(t) == definitional_oracle(t, TreeIndex::WienerEdge));
        CHECK(wiener_ve(t) == definitional_oracle(t, TreeIndex::WienerVertexEdge));
        CHECK(total_szeged(t) == definitional_oracle(t, TreeIndex::TotalSzeged));
        CHECK(pi_edge(t) == definitional_oracle(t, TreeIndex::PiEdge));
        CHECK(pi_vertex(t) == definitional_oracle(t, TreeIndex::PiVertex));
    }
}

TEST_CASE("pi_vertex is total edge weight times total vertex weight") {
    SplitMix64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        WeightedTree t = random_weighted_tree(rng, 14, 9);
        i128 total_w = 0, total_wp = 0;
        for (auto w : t.vertex_weight) total_w += w;
        for (const auto& e : t.edges) total_wp += e.weight;
        CHECK(pi_vertex(t) == total_w * total_wp);
    }
}

TEST_CASE("primitives invariant under node relabeling") {
    SplitMix64 rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        WeightedTree t = random_weighted_tree(rng, 12, 9);
        const std::size_t n = t.size();
        std::vector<std::int32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = n; i > 1; --i)
            std::swap(perm[i - 1], perm[rng.below(i)]);
        WeightedTree shuffled;
        shuffled.vertex_weight.resize(n);
        for (std::size_t i = 0; i < n; ++i) shuffled.vertex_weight[perm[i]] = t.vertex_weight[i];
        for (const auto& e : t.edges)
            shuffled.edges.push_back({perm[e.a], perm[e.b], e.weight});
        // shuffling edge order re-roots the traversal as well
        std::reverse(shuffled.edges.begin(), shuffled.edges.end());

        CHECK(szeged_weighted(t) == szeged_weighted(shuffled));
        CHECK(wiener_vertex(t) == wiener_vertex(shuffled));
        CHECK(wiener_edge(t) == wiener_edge(shuffled));
        CHECK(wiener_ve(t) == wiener_ve(shuffled));
        CHECK(total_szeged(t) == total_szeged(shuffled));
        CHECK(pi_edge(t) == pi_edge(shuffled));
        CHECK(pi_vertex(t) == pi_vertex(shuffled));
    }
}

TEST_CASE("bumping a vertex weight never decreases the weighted Szeged index") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        WeightedTree t = random_weighted_tree(rng, 12, 9);
        i128 before = szeged_weighted(t);
        t.vertex_weight[rng.below(t.size())] += 1;
        CHECK(szeged_weighted(t) >= before);
    }
}

TEST_CASE("oracle bound and overflow reporting") {
    WeightedTree big;
    big.vertex_weight.assign(65, 1);
    for (std::int32_t i = 1; i < 65; ++i) big.edges.push_back({i - 1, i, 1});
    CHECK_THROWS_WITH_AS(definitional_oracle(big, TreeIndex::Szeged),
                         doctest::Contains("BoundExceeded"), Error);

    WeightedTree huge = k2(std::int64_t{1} << 62, std::int64_t{1} << 62, std::int64_t{1} << 62);
    CHECK_THROWS_WITH_AS(szeged_weighted(huge), doctest::Contains("Overflow"), Error);

    WeightedTree not_tree;
    not_tree.vertex_weight = {1, 1, 1};
    not_tree.edges = {{0, 1, 1}, {0, 1, 1}};
    CHECK_THROWS_AS(edge_splits(not_tree), Error);
}
