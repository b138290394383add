#include "hexcut/explicit_graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "hexcut/errors.hpp"

namespace hexcut {

ExplicitGraph build_graph(std::span<const HexCoord> hexes) {
    if (hexes.empty())
        throw Error(ErrorCode::InvalidParameter, "hexagon set is empty");
    std::unordered_set<HexCoord> set(hexes.begin(), hexes.end());

    {
        std::unordered_set<HexCoord> visited;
        std::vector<HexCoord> queue{*set.begin()};
        visited.insert(queue.front());
        while (!queue.empty()) {
            HexCoord h = queue.back();
            queue.pop_back();
            for (int k = 0; k < 6; ++k) {
                HexCoord nb = hex_neighbor(h, k);
                if (set.contains(nb) && visited.insert(nb).second) queue.push_back(nb);
            }
        }
        if (visited.size() != set.size())
            throw Error(ErrorCode::NotConnected, "hexagon set is not edge-connected");
    }

    ExplicitGraph g;
    auto vertex_id = [&g](VertexCoord v) {
        auto [it, inserted] = g.ids.try_emplace(v, static_cast<std::int32_t>(g.coords.size()));
        if (inserted) g.coords.push_back(v);
        return it->second;
    };

    for (const HexCoord& h : set) {
        std::array<VertexCoord, 6> corner = hex_vertices(h);
        for (int k = 0; k < 6; ++k) {
            HexCoord nb = hex_neighbor(h, k);
            // Each edge is owned by its lexicographically smaller hexagon.
            if (set.contains(nb) && nb < h) continue;
            std::int32_t a = vertex_id(corner[k]);
            std::int32_t b = vertex_id(corner[(k + 1) % 6]);
            g.edges.push_back({a, b, edge_class(corner[k], corner[(k + 1) % 6])});
        }
    }

    const std::int64_t n = g.vertex_count();
    const std::int64_t m = g.edge_count();
    const std::int64_t h = static_cast<std::int64_t>(set.size());
    if (n - m + h != 1)
        throw Error(ErrorCode::HasHoles,
                    "Euler check n - m + h = " + std::to_string(n - m + h) + " != 1");

    g.adj.assign(g.coords.size(), {});
    for (const ExplicitGraph::Edge& e : g.edges) {
        g.adj[e.u].push_back(e.v);
        g.adj[e.v].push_back(e.u);
    }
    return g;
}

} // namespace hexcut
