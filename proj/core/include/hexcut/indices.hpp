// indices.hpp — facade combining the three quotient trees into index values.
//
// Each index of a benzenoid G decomposes over the quotient trees:
//
//   W(G)      = sum_i W(T_i, vcount)
//   Sz(G)     = sum_i Sz(T_i, vcount, w')
//   What_e(G) = sum_i ( What_e(T_i, w') + W(T_i, ecount) + W_ve(T_i, ecount, w') )
//   W_e(G)    = What_e(G) + C(m, 2)
//   Sz_e(G)   = sum_i Sz_t(T_i, ecount, w')
//   PI(G)     = sum_i ( PI_e(T_i, w') + PI_v(T_i, ecount, w') )
//   PI_v(G)   = n * m           (benzenoids are bipartite)
//
// so everything is O(|Z|) once the trees are built.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "hexcut/boundary.hpp"
#include "hexcut/num128.hpp"
#include "hexcut/quotient.hpp"

namespace hexcut {

struct DirectionPartial {
    EdgeClass cls = EdgeClass::D1;
    std::int64_t nodes = 0;
    std::int64_t vcount_sum = 0; // = |V(G)|
    std::int64_t wprime_sum = 0; // = |E_cls|
    i128 wiener = 0;             // W(T, vcount)
    i128 szeged = 0;             // Sz(T, vcount, w')
    i128 edge_wiener_hat = 0;    // What_e(T,w') + W(T,ecount) + W_ve(T,ecount,w')
    i128 edge_szeged = 0;        // Sz_t(T, ecount, w')
    i128 pi = 0;                 // PI_e(T,w') + PI_v(T,ecount,w')

    friend bool operator==(const DirectionPartial&, const DirectionPartial&) = default;
};

struct PhaseTimings {
    std::int64_t parse_us = 0;
    std::int64_t trees_us = 0;
    std::int64_t indices_us = 0;
    std::int64_t total_us = 0;

    friend bool operator==(const PhaseTimings&, const PhaseTimings&) = default;
};

struct IndexReport {
    std::int64_t vertices = 0;
    std::int64_t edges = 0;
    std::int64_t boundary_length = 0;
    std::int64_t hexagons = 0;

    i128 wiener = 0;
    i128 edge_wiener = 0;
    i128 edge_wiener_hat = 0;
    i128 szeged = 0;
    i128 edge_szeged = 0;
    i128 pi = 0;
    i128 vertex_pi = 0;

    std::array<DirectionPartial, 3> per_direction{};
    std::string method; // "fast" or "oracle"
    PhaseTimings timings;
};

// (|V|, |E|) from the trees; throws InconsistentDirections when the three
// directions disagree.
std::pair<std::int64_t, std::int64_t> counts(const std::array<QuotientTree, 3>& trees);

// Convenience single-index entry points; each builds the trees it needs.
i128 szeged_index(const BoundaryCycle& z);
i128 wiener_index(const BoundaryCycle& z);
std::pair<i128, i128> edge_wiener_index(const BoundaryCycle& z); // (W_e, What_e)
i128 edge_szeged_index(const BoundaryCycle& z);
i128 pi_index(const BoundaryCycle& z);
i128 vertex_pi_index(const BoundaryCycle& z);

// One pass: builds the trees once, evaluates every index, fills timings
// (parse_us is the caller's business). With `parallel` the three directions
// are swept concurrently; results are identical either way.
IndexReport compute_all(const BoundaryCycle& z, bool parallel = false);

} // namespace hexcut
