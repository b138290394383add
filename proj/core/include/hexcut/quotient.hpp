// quotient.hpp — weighted quotient trees from the boundary cycle alone.
//
// For an edge class c, removing all class-c edges splits a benzenoid into
// path components, and the elementary cuts between those components form a
// tree. sweep_direction builds that tree, with both node weights (vertex
// count of the component, and edge count = vertex count - 1) and edge weights
// (number of parallel edges in the cut), in O(|Z|) time and memory from the
// boundary cycle Z. Interior vertices are never touched.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hexcut/boundary.hpp"
#include "hexcut/lattice.hpp"

namespace hexcut {

// One elementary cut, described in the canonical frame where its class has
// been rotated onto D1: `level` is the X coordinate of the left endpoints of
// the cut's edges (always 2 mod 3), y_open/y_close are the transverse
// coordinates of its two boundary edges in walk-encounter order.
struct CutRecord {
    EdgeClass cls;
    std::int64_t level;
    std::int64_t y_open;
    std::int64_t y_close;
    std::int64_t multiplicity; // = |y_open - y_close| / 2 + 1
};

struct QuotientTree {
    struct Edge {
        std::int32_t a;
        std::int32_t b;
        std::int64_t weight; // w' = cut multiplicity
        CutRecord cut;
    };

    EdgeClass cls = EdgeClass::D1;
    std::vector<std::int64_t> vcount; // vertices per component
    std::vector<Edge> edges;

    std::size_t size() const { return vcount.size(); }
    // Components of a benzenoid minus one direction are paths, so the edge
    // count of a component is its vertex count minus one.
    std::int64_t ecount(std::size_t node) const { return vcount[node] - 1; }
};

// Builds (T_c, w_c, w'_c) by a single boundary walk; O(|Z|) time and memory.
QuotientTree sweep_direction(const BoundaryCycle& z, EdgeClass cls);

// All three directions. The input cycle is rotated by 0, 1, 2 applications
// of rotate120 so each class is swept in the canonical D1 frame.
std::array<QuotientTree, 3> quotient_trees(const BoundaryCycle& z);

// O(n) testing reference: materializes the graph, removes class-c edges,
// finds components by traversal and counts everything directly.
QuotientTree quotient_tree_reference(std::span<const HexCoord> hexes, EdgeClass cls);

} // namespace hexcut
