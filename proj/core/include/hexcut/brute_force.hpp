// brute_force.hpp — definitional index computation on the explicit graph.
//
// Everything here evaluates the textbook definitions by breadth-first search,
// deliberately sharing no code with the fast pipeline. These are the ground
// truth for every equivalence test.
//
// Edge-to-edge distance follows the line-graph convention: d(e,e) = 0 and
// d(e,f) = dhat(e,f) + 1 for distinct edges, where dhat is the minimum
// endpoint-to-endpoint distance.
#pragma once

#include <cstddef>
#include <utility>

#include "hexcut/explicit_graph.hpp"
#include "hexcut/num128.hpp"

namespace hexcut {

inline constexpr std::size_t kDefaultOracleBound = 5000;

struct BruteForceIndices {
    i128 wiener = 0;
    i128 edge_wiener = 0;     // line-graph convention
    i128 edge_wiener_hat = 0; // = edge_wiener - C(m,2)
    i128 szeged = 0;
    i128 edge_szeged = 0;
    i128 pi = 0;
    i128 vertex_pi = 0;
};

// All indices in one pass over the edges (two BFS per edge, one per vertex).
// Throws BoundExceeded when the graph has more than `bound` vertices.
BruteForceIndices brute_force_indices(const ExplicitGraph& g,
                                      std::size_t bound = kDefaultOracleBound);

i128 wiener_bf(const ExplicitGraph& g, std::size_t bound = kDefaultOracleBound);
i128 szeged_bf(const ExplicitGraph& g, std::size_t bound = kDefaultOracleBound);
i128 edge_szeged_bf(const ExplicitGraph& g, std::size_t bound = kDefaultOracleBound);
i128 pi_bf(const ExplicitGraph& g, std::size_t bound = kDefaultOracleBound);
i128 vertex_pi_bf(const ExplicitGraph& g, std::size_t bound = kDefaultOracleBound);
// Returns (W_e, What_e).
std::pair<i128, i128> edge_wiener_bf(const ExplicitGraph& g,
                                     std::size_t bound = kDefaultOracleBound);

// Cross-check mode: materializes the line graph and computes its Wiener
// index directly. Kept separate so the main oracle never builds it.
i128 line_graph_wiener(const ExplicitGraph& g, std::size_t bound = 300);

// |M_1|, |M_2| for one edge (edges strictly closer to each endpoint,
// equidistant edges excluded from both).
std::pair<std::int64_t, std::int64_t> m_set_sizes(const ExplicitGraph& g, std::size_t edge_idx);

} // namespace hexcut
