#include "hexcut/brute_force.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "hexcut/errors.hpp"

namespace hexcut {

namespace {

void check_bound(const ExplicitGraph& g, std::size_t bound) {
    if (g.coords.size() > bound)
        throw Error(ErrorCode::BoundExceeded,
                    "graph has " + std::to_string(g.coords.size()) +
                        " vertices, oracle bound is " + std::to_string(bound));
}

void bfs(const ExplicitGraph& g, std::int32_t src, std::vector<std::int32_t>& dist) {
    dist.assign(g.coords.size(), -1);
    std::queue<std::int32_t> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        std::int32_t u = q.front();
        q.pop();
        for (std::int32_t v : g.adj[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
}

// Per-edge counts derived from BFS trees rooted at the edge's endpoints.
struct EdgeCounts {
    std::int64_t n1 = 0, n2 = 0; // vertices strictly closer to u / to v
    std::int64_t m1 = 0, m2 = 0; // edges strictly closer to u / to v
    i128 dhat_sum = 0;           // sum over f != e of dhat(e, f)
};

EdgeCounts edge_counts(const ExplicitGraph& g, std::size_t edge_idx,
                       std::vector<std::int32_t>& du, std::vector<std::int32_t>& dv) {
    const ExplicitGraph::Edge& e = g.edges[edge_idx];
    bfs(g, e.u, du);
    bfs(g, e.v, dv);
    EdgeCounts c;
    for (std::size_t x = 0; x < g.coords.size(); ++x) {
        if (du[x] < dv[x]) ++c.n1;
        else if (dv[x] < du[x]) ++c.n2;
    }
    for (std::size_t fi = 0; fi < g.edges.size(); ++fi) {
        if (fi == edge_idx) continue;
        const ExplicitGraph::Edge& f = g.edges[fi];
        std::int32_t fu = std::min({du[f.u], du[f.v]});
        std::int32_t fv = std::min({dv[f.u], dv[f.v]});
        if (fu < fv) ++c.m1;
        else if (fv < fu) ++c.m2;
        c.dhat_sum = checked_add(c.dhat_sum, std::min(fu, fv));
    }
    return c;
}

} // namespace

BruteForceIndices brute_force_indices(const ExplicitGraph& g, std::size_t bound) {
    check_bound(g, bound);
    BruteForceIndices out;

    std::vector<std::int32_t> dist;
    for (std::size_t src = 0; src < g.coords.size(); ++src) {
        bfs(g, static_cast<std::int32_t>(src), dist);
        i128 row = 0;
        for (std::int32_t d : dist) row = checked_add(row, d);
        out.wiener = checked_add(out.wiener, row);
    }
    out.wiener /= 2;

    std::vector<std::int32_t> du, dv;
    i128 ordered_line_dist = 0; // sum over ordered pairs (e, f), f != e, of dhat + 1
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        EdgeCounts c = edge_counts(g, ei, du, dv);
        out.szeged = checked_add(out.szeged, checked_mul(c.n1, c.n2));
        out.edge_szeged = checked_add(out.edge_szeged, checked_mul(c.m1, c.m2));
        out.pi = checked_add(out.pi, c.m1 + c.m2);
        out.vertex_pi = checked_add(out.vertex_pi, c.n1 + c.n2);
        ordered_line_dist = checked_add(
            ordered_line_dist,
            checked_add(c.dhat_sum, static_cast<i128>(g.edges.size()) - 1));
    }
    out.edge_wiener = ordered_line_dist / 2;
    const i128 m = g.edge_count();
    out.edge_wiener_hat = checked_sub(out.edge_wiener, checked_mul(m, m - 1) / 2);
    return out;
}

i128 wiener_bf(const ExplicitGraph& g, std::size_t bound) {
    check_bound(g, bound);
    std::vector<std::int32_t> dist;
    i128 total = 0;
    for (std::size_t src = 0; src < g.coords.size(); ++src) {
        bfs(g, static_cast<std::int32_t>(src), dist);
        for (std::int32_t d : dist) total = checked_add(total, d);
    }
    return total / 2;
}

i128 szeged_bf(const ExplicitGraph& g, std::size_t bound) {
    check_bound(g, bound);
    std::vector<std::int32_t> du, dv;
    i128 total = 0;
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        EdgeCounts c = edge_counts(g, ei, du, dv);
        total = checked_add(total, checked_mul(c.n1, c.n2));
    }
    return total;
}

i128 edge_szeged_bf(const ExplicitGraph& g, std::size_t bound) {
    check_bound(g, bound);
    std::vector<std::int32_t> du, dv;
    i128 total = 0;
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        EdgeCounts c = edge_counts(g, ei, du, dv);
        total = checked_add(total, checked_mul(c.m1, c.m2));
    }
    return total;
}

i128 pi_bf(const ExplicitGraph& g, std::size_t bound) {
    check_bound(g, bound);
    std::vector<std::int32_t> du, dv;
    i128 total = 0;
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        EdgeCounts c = edge_counts(g, ei, du, dv);
        total = checked_add(total, c.m1 + c.m2);
    }
    return total;
}

i128 vertex_pi_bf(const ExplicitGraph& g, std::size_t bound) {
    check_bound(g, bound);
    std::vector<std::int32_t> du, dv;
    i128 total = 0;
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        EdgeCounts c = edge_counts(g, ei, du, dv);
        total = checked_add(total, c.n1 + c.n2);
    }
    return total;
}

std::pair<i128, i128> edge_wiener_bf(const ExplicitGraph& g, std::size_t bound) {
    check_bound(g, bound);
    std::vector<std::int32_t> du, dv;
    i128 ordered = 0;
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        EdgeCounts c = edge_counts(g, ei, du, dv);
        ordered = checked_add(ordered,
                              checked_add(c.dhat_sum, static_cast<i128>(g.edges.size()) - 1));
    }
    i128 we = ordered / 2;
    const i128 m = g.edge_count();
    return {we, checked_sub(we, checked_mul(m, m - 1) / 2)};
}

i128 line_graph_wiener(const ExplicitGraph& g, std::size_t bound) {
    if (g.coords.size() > bound)
        throw Error(ErrorCode::BoundExceeded,
                    "line-graph cross-check limited to " + std::to_string(bound) + " vertices");
    const std::size_t m = g.edges.size();
    std::vector<std::vector<std::int32_t>> incident(g.coords.size());
    for (std::size_t ei = 0; ei < m; ++ei) {
        incident[g.edges[ei].u].push_back(static_cast<std::int32_t>(ei));
        incident[g.edges[ei].v].push_back(static_cast<std::int32_t>(ei));
    }
    std::vector<std::vector<std::int32_t>> ladj(m);
    for (const auto& group : incident)
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                ladj[group[i]].push_back(group[j]);
                ladj[group[j]].push_back(group[i]);
            }

    i128 total = 0;
    std::vector<std::int32_t> dist(m);
    std::queue<std::int32_t> q;
    for (std::size_t src = 0; src < m; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        q.push(static_cast<std::int32_t>(src));
        while (!q.empty()) {
            std::int32_t u = q.front();
            q.pop();
            for (std::int32_t v : ladj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (std::int32_t d : dist) total = checked_add(total, d);
    }
    return total / 2;
}

std::pair<std::int64_t, std::int64_t> m_set_sizes(const ExplicitGraph& g, std::size_t edge_idx) {
    std::vector<std::int32_t> du, dv;
    EdgeCounts c = edge_counts(g, edge_idx, du, dv);
    return {c.m1, c.m2};
}

} // namespace hexcut
