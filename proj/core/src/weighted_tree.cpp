#include "hexcut/weighted_tree.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "hexcut/errors.hpp"

namespace hexcut {

namespace {

struct Adjacency {
    // Per node: (neighbor, edge index) pairs.
    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> nbr;
};

Adjacency build_adjacency(const WeightedTree& t) {
    const std::size_t n = t.size();
    if (n == 0) throw Error(ErrorCode::InvalidParameter, "tree has no nodes");
    if (t.edges.size() != n - 1)
        throw Error(ErrorCode::InvalidParameter,
                    "tree with " + std::to_string(n) + " nodes must have " +
                        std::to_string(n - 1) + " edges, got " + std::to_string(t.edges.size()));
    Adjacency adj;
    adj.nbr.assign(n, {});
    for (std::size_t ei = 0; ei < t.edges.size(); ++ei) {
        const WeightedTree::Edge& e = t.edges[ei];
        if (e.a < 0 || e.b < 0 || static_cast<std::size_t>(e.a) >= n ||
            static_cast<std::size_t>(e.b) >= n || e.a == e.b)
            throw Error(ErrorCode::InvalidParameter, "edge endpoints out of range");
        adj.nbr[e.a].emplace_back(e.b, static_cast<std::int32_t>(ei));
        adj.nbr[e.b].emplace_back(e.a, static_cast<std::int32_t>(ei));
    }
    return adj;
}

} // namespace

std::vector<EdgeSplit> edge_splits(const WeightedTree& t) {
    const std::size_t n = t.size();
    Adjacency adj = build_adjacency(t);

    // Iterative DFS from node 0 producing a child-before-parent order.
    std::vector<std::int32_t> order;
    std::vector<std::int32_t> parent(n, -1), parent_edge(n, -1);
    order.reserve(n);
    {
        std::vector<std::int32_t> stack{0};
        std::vector<bool> seen(n, false);
        seen[0] = true;
        while (!stack.empty()) {
            std::int32_t u = stack.back();
            stack.pop_back();
            order.push_back(u);
            for (auto [v, ei] : adj.nbr[u]) {
                if (!seen[v]) {
                    seen[v] = true;
                    parent[v] = u;
                    parent_edge[v] = ei;
                    stack.push_back(v);
                }
            }
        }
        if (order.size() != n)
            throw Error(ErrorCode::InvalidParameter, "tree is not connected");
    }

    std::int64_t total_w = 0, total_wp = 0;
    for (std::int64_t w : t.vertex_weight) total_w = checked_add64(total_w, w);
    for (const WeightedTree::Edge& e : t.edges) total_wp = checked_add64(total_wp, e.weight);

    // Subtree aggregates: vertex-weight sum and edge-weight sum (edges fully
    // inside the subtree, i.e. excluding the parent edge).
    std::vector<std::int64_t> sub_w(t.vertex_weight);
    std::vector<std::int64_t> sub_wp(n, 0);
    std::vector<EdgeSplit> splits(t.edges.size());
    for (std::size_t i = n; i-- > 1;) {
        std::int32_t v = order[i];
        std::int32_t p = parent[v];
        std::int32_t ei = parent_edge[v];
        const WeightedTree::Edge& e = t.edges[ei];
        std::int64_t below_w = sub_w[v];
        std::int64_t below_wp = sub_wp[v];
        EdgeSplit s;
        // Orient the split so n1/m1 belong to the side of endpoint `a`.
        std::int64_t other_w = total_w - below_w;
        std::int64_t other_wp = total_wp - below_wp - e.weight;
        if (e.b == v) {
            s = {other_w, below_w, other_wp, below_wp};
        } else {
            s = {below_w, other_w, below_wp, other_wp};
        }
        splits[ei] = s;
        sub_w[p] = checked_add64(sub_w[p], below_w);
        sub_wp[p] = checked_add64(sub_wp[p], checked_add64(below_wp, e.weight));
    }
    return splits;
}

namespace {

template <typename Term>
i128 accumulate_over_splits(const WeightedTree& t, Term term) {
    std::vector<EdgeSplit> splits = edge_splits(t);
    i128 total = 0;
    for (std::size_t ei = 0; ei < splits.size(); ++ei)
        total = checked_add(total, term(t.edges[ei], splits[ei]));
    return total;
}

} // namespace

i128 szeged_weighted(const WeightedTree& t) {
    return accumulate_over_splits(t, [](const WeightedTree::Edge& e, const EdgeSplit& s) {
        return checked_mul(e.weight, checked_mul(s.n1, s.n2));
    });
}

i128 wiener_vertex(const WeightedTree& t) {
    return accumulate_over_splits(t, [](const WeightedTree::Edge&, const EdgeSplit& s) {
        return checked_mul(s.n1, s.n2);
    });
}

i128 wiener_edge(const WeightedTree& t) {
    return accumulate_over_splits(t, [](const WeightedTree::Edge&, const EdgeSplit& s) {
        return checked_mul(s.m1, s.m2);
    });
}

i128 wiener_ve(const WeightedTree& t) {
    return accumulate_over_splits(t, [](const WeightedTree::Edge&, const EdgeSplit& s) {
        return checked_add(checked_mul(s.n1, s.m2), checked_mul(s.n2, s.m1));
    });
}

i128 total_szeged(const WeightedTree& t) {
    return accumulate_over_splits(t, [](const WeightedTree::Edge& e, const EdgeSplit& s) {
        return checked_mul(e.weight,
                           checked_mul(checked_add(s.n1, s.m1), checked_add(s.n2, s.m2)));
    });
}

i128 pi_edge(const WeightedTree& t) {
    return accumulate_over_splits(t, [](const WeightedTree::Edge& e, const EdgeSplit& s) {
        return checked_mul(e.weight, checked_add(s.m1, s.m2));
    });
}

i128 pi_vertex(const WeightedTree& t) {
    return accumulate_over_splits(t, [](const WeightedTree::Edge& e, const EdgeSplit& s) {
        return checked_mul(e.weight, checked_add(s.n1, s.n2));
    });
}

i128 definitional_oracle(const WeightedTree& t, TreeIndex which, std::size_t bound) {
    const std::size_t n = t.size();
    if (n > bound)
        throw Error(ErrorCode::BoundExceeded, "definitional oracle limited to " +
                                                  std::to_string(bound) + " nodes, tree has " +
                                                  std::to_string(n));
    Adjacency adj = build_adjacency(t);

    // All-pairs distances by BFS from every node.
    std::vector<std::vector<std::int32_t>> dist(n, std::vector<std::int32_t>(n, -1));
    for (std::size_t s = 0; s < n; ++s) {
        std::queue<std::int32_t> q;
        dist[s][s] = 0;
        q.push(static_cast<std::int32_t>(s));
        while (!q.empty()) {
            std::int32_t u = q.front();
            q.pop();
            for (auto [v, ei] : adj.nbr[u])
                if (dist[s][v] < 0) {
                    dist[s][v] = dist[s][u] + 1;
                    q.push(v);
                }
        }
        for (std::size_t v = 0; v < n; ++v)
            if (dist[s][v] < 0)
                throw Error(ErrorCode::InvalidParameter, "tree is not connected");
    }

    auto d_vertex_edge = [&](std::size_t x, const WeightedTree::Edge& e) {
        return std::min(dist[x][e.a], dist[x][e.b]);
    };
    auto dhat = [&](const WeightedTree::Edge& e, const WeightedTree::Edge& f) {
        return std::min(std::min(dist[e.a][f.a], dist[e.a][f.b]),
                        std::min(dist[e.b][f.a], dist[e.b][f.b]));
    };

    // N/M set weight sums for one edge, by the strict-closeness definitions.
    auto set_sums = [&](const WeightedTree::Edge& e) {
        struct Sums {
            i128 n1 = 0, n2 = 0, m1 = 0, m2 = 0;
        } s;
        for (std::size_t x = 0; x < n; ++x) {
            if (dist[x][e.a] < dist[x][e.b]) s.n1 = checked_add(s.n1, t.vertex_weight[x]);
            else if (dist[x][e.b] < dist[x][e.a]) s.n2 = checked_add(s.n2, t.vertex_weight[x]);
        }
        for (const WeightedTree::Edge& f : t.edges) {
            if (&f == &e) continue;
            std::int32_t da = std::min(dist[f.a][e.a], dist[f.b][e.a]);
            std::int32_t db = std::min(dist[f.a][e.b], dist[f.b][e.b]);
            if (da < db) s.m1 = checked_add(s.m1, f.weight);
            else if (db < da) s.m2 = checked_add(s.m2, f.weight);
        }
        return s;
    };

    i128 total = 0;
    switch (which) {
    case TreeIndex::WienerVertex:
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                total = checked_add(total,
                                    checked_mul(checked_mul(t.vertex_weight[x],
                                                            t.vertex_weight[y]),
                                                dist[x][y]));
        return total / 2;
    case TreeIndex::WienerEdge:
        for (const WeightedTree::Edge& e : t.edges)
            for (const WeightedTree::Edge& f : t.edges)
                total = checked_add(total, checked_mul(checked_mul(e.weight, f.weight),
                                                       dhat(e, f)));
        return total / 2;
    case TreeIndex::WienerVertexEdge:
        for (std::size_t x = 0; x < n; ++x)
            for (const WeightedTree::Edge& e : t.edges)
                total = checked_add(total,
                                    checked_mul(checked_mul(t.vertex_weight[x], e.weight),
                                                d_vertex_edge(x, e)));
        return total;
    case TreeIndex::Szeged:
        for (const WeightedTree::Edge& e : t.edges) {
            auto s = set_sums(e);
            total = checked_add(total, checked_mul(e.weight, checked_mul(s.n1, s.n2)));
        }
        return total;
    case TreeIndex::TotalSzeged:
        for (const WeightedTree::Edge& e : t.edges) {
            auto s = set_sums(e);
            total = checked_add(total,
                                checked_mul(e.weight, checked_mul(checked_add(s.n1, s.m1),
                                                                  checked_add(s.n2, s.m2))));
        }
        return total;
    case TreeIndex::PiEdge:
        for (const WeightedTree::Edge& e : t.edges) {
            auto s = set_sums(e);
            total = checked_add(total, checked_mul(e.weight, checked_add(s.m1, s.m2)));
        }
        return total;
    case TreeIndex::PiVertex:
        for (const WeightedTree::Edge& e : t.edges) {
            auto s = set_sums(e);
            total = checked_add(total, checked_mul(e.weight, checked_add(s.n1, s.n2)));
        }
        return total;
    }
    throw Error(ErrorCode::InvalidParameter, "unknown tree index");
}

} // namespace hexcut
