// explicit_graph.hpp — full vertex/edge realization of a benzenoid.
//
// Used by the brute-force oracle and the reference quotient construction
// only; the fast pipeline never materializes it.
#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "hexcut/lattice.hpp"

namespace hexcut {

struct ExplicitGraph {
    struct Edge {
        std::int32_t u;
        std::int32_t v;
        EdgeClass cls;
    };

    std::vector<VertexCoord> coords;               // id -> coordinate
    std::unordered_map<VertexCoord, std::int32_t> ids; // coordinate -> id
    std::vector<std::vector<std::int32_t>> adj;
    std::vector<Edge> edges;

    std::int64_t vertex_count() const { return static_cast<std::int64_t>(coords.size()); }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges.size()); }
};

// Builds the union graph of the hexagons. Same validation as from_hexagons:
// NotConnected / HasHoles on bad sets.
ExplicitGraph build_graph(std::span<const HexCoord> hexes);

} // namespace hexcut
