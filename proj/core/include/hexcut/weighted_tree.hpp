// weighted_tree.hpp — linear-time index primitives on vertex/edge weighted
// trees.
//
// All seven quantities are driven by one edge-split table: for every edge e,
// the vertex-weight sums (n1, n2) and edge-weight sums (m1, m2) of the two
// components of T - e. In a tree every vertex and every edge other than e is
// strictly closer to exactly one endpoint of e, so these split sums evaluate
// the N/M-set definitions exactly.
#pragma once

#include <cstdint>
#include <vector>

#include "hexcut/num128.hpp"

namespace hexcut {

struct WeightedTree {
    struct Edge {
        std::int32_t a;
        std::int32_t b;
        std::int64_t weight; // w'
    };

    std::vector<std::int64_t> vertex_weight; // w, one per node
    std::vector<Edge> edges;                 // exactly n - 1 entries

    std::size_t size() const { return vertex_weight.size(); }
};

struct EdgeSplit {
    std::int64_t n1, n2; // vertex-weight sums on the a-side / b-side
    std::int64_t m1, m2; // edge-weight sums (excluding the edge itself)
};

// One split entry per edge, in edge order. O(n). Validates tree shape
// (connected, acyclic); throws Overflow when an aggregate exceeds 64 bits.
std::vector<EdgeSplit> edge_splits(const WeightedTree& t);

i128 szeged_weighted(const WeightedTree& t); // sum w'(e) n1 n2
i128 wiener_vertex(const WeightedTree& t);   // sum n1 n2
i128 wiener_edge(const WeightedTree& t);     // sum m1 m2  (dhat convention)
i128 wiener_ve(const WeightedTree& t);       // sum n1 m2 + n2 m1
i128 total_szeged(const WeightedTree& t);    // sum w'(e) (n1+m1)(n2+m2)
i128 pi_edge(const WeightedTree& t);         // sum w'(e) (m1+m2)
i128 pi_vertex(const WeightedTree& t);       // sum w'(e) (n1+n2)

enum class TreeIndex {
    Szeged,
    WienerVertex,
    WienerEdge,
    WienerVertexEdge,
    TotalSzeged,
    PiEdge,
    PiVertex,
};

// Literal evaluation of the defining double sums via all-pairs tree
// distances, O(n^2). Testing oracle; refuses trees above `bound` nodes.
i128 definitional_oracle(const WeightedTree& t, TreeIndex which, std::size_t bound = 64);

} // namespace hexcut
