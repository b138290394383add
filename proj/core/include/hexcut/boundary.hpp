// boundary.hpp — the boundary cycle of a benzenoid system.
//
// A BoundaryCycle is a simple closed lattice walk, normalized to
// counterclockwise orientation at construction time. It is the only input the
// fast index pipeline ever looks at.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hexcut/lattice.hpp"

namespace hexcut {

class BoundaryCycle {
public:
    // Empty placeholder; every populated instance comes from the validating
    // factory below.
    BoundaryCycle() = default;

    // Validates a closed vertex loop (consecutive entries lattice-adjacent,
    // cyclically) and normalizes it to CCW. Throws IllegalStep, NotSimple,
    // TooShort or NotClosed on invalid input.
    static BoundaryCycle from_vertex_loop(std::vector<VertexCoord> verts);

    const std::vector<VertexCoord>& vertices() const { return verts_; }
    std::size_t length() const { return verts_.size(); }

    // Half the cyclic sum of cross products X_i*Y_{i+1} - X_{i+1}*Y_i.
    // Positive after normalization; equals 6 * hexagon_count().
    std::int64_t shoelace_sum() const;
    std::int64_t hexagon_count() const { return shoelace_sum() / 6; }

    // Cycles are equal when one is a start-rotation of the other (both are
    // CCW-normalized, so orientation never differs).
    friend bool operator==(const BoundaryCycle& a, const BoundaryCycle& b);

private:
    std::vector<VertexCoord> verts_;
};

struct BoundaryWord {
    VertexCoord start;
    std::string steps; // symbols '0'..'5'

    friend bool operator==(const BoundaryWord&, const BoundaryWord&) = default;
};

// Walks the word and validates the resulting cycle.
BoundaryCycle parse_word(const BoundaryWord& word);

// Canonical serialization: CCW orientation, start rotated to the
// lexicographically smallest (X, Y) vertex. parse_word(emit_word(c)) == c.
BoundaryWord emit_word(const BoundaryCycle& cycle);

// Outer-face cycle of a union of hexagons. Duplicates in `hexes` are ignored.
// Throws NotConnected when the hexagons are not edge-connected and HasHoles
// when the union is not simply connected (Euler check n - m + h == 1).
BoundaryCycle from_hexagons(std::span<const HexCoord> hexes);

// Inverse of from_hexagons: the hexagons enclosed by the cycle, sorted by
// (q, r). Runs in time proportional to the hexagon count, so it is only used
// where the explicit graph is needed anyway (oracle paths).
std::vector<HexCoord> hexagons_of(const BoundaryCycle& cycle);

} // namespace hexcut
