#include "hexcut/indices.hpp"

#include <chrono>
#include <future>
#include <string>

#include "hexcut/errors.hpp"
#include "hexcut/weighted_tree.hpp"

namespace hexcut {

namespace {

enum class NodeWeight { VertexCount, EdgeCount };

WeightedTree to_weighted_tree(const QuotientTree& qt, NodeWeight kind) {
    WeightedTree t;
    t.vertex_weight.reserve(qt.size());
    for (std::size_t i = 0; i < qt.size(); ++i)
        t.vertex_weight.push_back(kind == NodeWeight::VertexCount ? qt.vcount[i] : qt.ecount(i));
    t.edges.reserve(qt.edges.size());
    for (const QuotientTree::Edge& e : qt.edges) t.edges.push_back({e.a, e.b, e.weight});
    return t;
}

DirectionPartial evaluate_direction(const QuotientTree& qt) {
    DirectionPartial p;
    p.cls = qt.cls;
    p.nodes = static_cast<std::int64_t>(qt.size());
    for (std::int64_t w : qt.vcount) p.vcount_sum = checked_add64(p.vcount_sum, w);
    for (const QuotientTree::Edge& e : qt.edges)
        p.wprime_sum = checked_add64(p.wprime_sum, e.weight);

    const WeightedTree by_vertices = to_weighted_tree(qt, NodeWeight::VertexCount);
    const WeightedTree by_edges = to_weighted_tree(qt, NodeWeight::EdgeCount);

    p.wiener = wiener_vertex(by_vertices);
    p.szeged = szeged_weighted(by_vertices);
    p.edge_wiener_hat = checked_add(wiener_edge(by_edges),
                                    checked_add(wiener_vertex(by_edges), wiener_ve(by_edges)));
    p.edge_szeged = total_szeged(by_edges);
    p.pi = checked_add(pi_edge(by_edges), pi_vertex(by_edges));
    return p;
}

std::int64_t tree_vertex_total(const QuotientTree& qt) {
    std::int64_t n = 0;
    for (std::int64_t w : qt.vcount) n = checked_add64(n, w);
    return n;
}

std::int64_t tree_edge_total(const QuotientTree& qt) {
    std::int64_t m = 0;
    for (const QuotientTree::Edge& e : qt.edges) m = checked_add64(m, e.weight);
    for (std::size_t i = 0; i < qt.size(); ++i) m = checked_add64(m, qt.ecount(i));
    return m;
}

i128 binom2(std::int64_t m) { return checked_mul(static_cast<i128>(m), m - 1) / 2; }

} // namespace

std::pair<std::int64_t, std::int64_t> counts(const std::array<QuotientTree, 3>& trees) {
    std::int64_t n = tree_vertex_total(trees[0]);
    std::int64_t m = tree_edge_total(trees[0]);
    for (int i = 1; i < 3; ++i) {
        if (tree_vertex_total(trees[i]) != n || tree_edge_total(trees[i]) != m)
            throw Error(ErrorCode::InconsistentDirections,
                        "the three quotient trees disagree on |V| or |E|");
    }
    return {n, m};
}

i128 szeged_index(const BoundaryCycle& z) {
    i128 total = 0;
    for (EdgeClass cls : kAllEdgeClasses)
        total = checked_add(total,
                            szeged_weighted(to_weighted_tree(sweep_direction(z, cls),
                                                             NodeWeight::VertexCount)));
    return total;
}

i128 wiener_index(const BoundaryCycle& z) {
    i128 total = 0;
    for (EdgeClass cls : kAllEdgeClasses)
        total = checked_add(total,
                            wiener_vertex(to_weighted_tree(sweep_direction(z, cls),
                                                           NodeWeight::VertexCount)));
    return total;
}

std::pair<i128, i128> edge_wiener_index(const BoundaryCycle& z) {
    auto trees = quotient_trees(z);
    i128 hat = 0;
    for (const QuotientTree& qt : trees) {
        WeightedTree t = to_weighted_tree(qt, NodeWeight::EdgeCount);
        hat = checked_add(hat, checked_add(wiener_edge(t),
                                           checked_add(wiener_vertex(t), wiener_ve(t))));
    }
    auto [n, m] = counts(trees);
    (void)n;
    return {checked_add(hat, binom2(m)), hat};
}

i128 edge_szeged_index(const BoundaryCycle& z) {
    i128 total = 0;
    for (EdgeClass cls : kAllEdgeClasses)
        total = checked_add(total, total_szeged(to_weighted_tree(sweep_direction(z, cls),
                                                                 NodeWeight::EdgeCount)));
    return total;
}

i128 pi_index(const BoundaryCycle& z) {
    i128 total = 0;
    for (EdgeClass cls : kAllEdgeClasses) {
        WeightedTree t = to_weighted_tree(sweep_direction(z, cls), NodeWeight::EdgeCount);
        total = checked_add(total, checked_add(pi_edge(t), pi_vertex(t)));
    }
    return total;
}

i128 vertex_pi_index(const BoundaryCycle& z) {
    auto [n, m] = counts(quotient_trees(z));
    return checked_mul(static_cast<i128>(n), m);
}

IndexReport compute_all(const BoundaryCycle& z, bool parallel) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();

    std::array<QuotientTree, 3> trees;
    if (parallel) {
        std::array<std::future<QuotientTree>, 3> futures;
        for (int i = 0; i < 3; ++i)
            futures[i] = std::async(std::launch::async, sweep_direction, std::cref(z),
                                    kAllEdgeClasses[i]);
        for (int i = 0; i < 3; ++i) trees[i] = futures[i].get();
    } else {
        trees = quotient_trees(z);
    }
    const auto t1 = clock::now();

    IndexReport report;
    report.boundary_length = static_cast<std::int64_t>(z.length());
    report.hexagons = z.hexagon_count();
    std::tie(report.vertices, report.edges) = counts(trees);

    for (int i = 0; i < 3; ++i) {
        DirectionPartial p = evaluate_direction(trees[i]);
        report.wiener = checked_add(report.wiener, p.wiener);
        report.szeged = checked_add(report.szeged, p.szeged);
        report.edge_wiener_hat = checked_add(report.edge_wiener_hat, p.edge_wiener_hat);
        report.edge_szeged = checked_add(report.edge_szeged, p.edge_szeged);
        report.pi = checked_add(report.pi, p.pi);
        report.per_direction[i] = p;
    }
    report.edge_wiener = checked_add(report.edge_wiener_hat, binom2(report.edges));
    report.vertex_pi = checked_mul(static_cast<i128>(report.vertices), report.edges);
    report.method = "fast";
    const auto t2 = clock::now();

    auto us = [](auto a, auto b) {
        return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count();
    };
    report.timings.trees_us = us(t0, t1);
    report.timings.indices_us = us(t1, t2);
    report.timings.total_us = us(t0, t2);
    return report;
}

} // namespace hexcut
