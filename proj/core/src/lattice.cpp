#include "hexcut/lattice.hpp"

#include <cstdlib>
#include <string>

#include "hexcut/errors.hpp"

namespace hexcut {

namespace {

constexpr std::array<StepVector, 6> kStepVectors = {
    StepVector{2, 0},  StepVector{1, 1},   StepVector{-1, 1},
    StepVector{-2, 0}, StepVector{-1, -1}, StepVector{1, -1}};

int mod3(std::int64_t x) {
    int r = static_cast<int>(x % 3);
    return r < 0 ? r + 3 : r;
}

std::string coord_str(VertexCoord v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

} // namespace

StepVector step_vector(StepDir dir) { return kStepVectors[static_cast<int>(dir)]; }

int vertex_type(VertexCoord v) { return mod3(v.x); }

bool is_lattice_vertex(VertexCoord v) {
    return ((v.x + v.y) & 1) == 0 && mod3(v.x) != 0;
}

bool step_legal(VertexCoord from, StepDir dir) {
    // Type-2 vertices step with even symbols, type-1 with odd ones.
    int parity = static_cast<int>(dir) & 1;
    return vertex_type(from) == 2 ? parity == 0 : parity == 1;
}

VertexCoord apply_step(VertexCoord from, StepDir dir) {
    StepVector d = step_vector(dir);
    return VertexCoord{from.x + d.dx, from.y + d.dy};
}

std::optional<StepDir> step_between(VertexCoord from, VertexCoord to) {
    if (!is_lattice_vertex(from) || !is_lattice_vertex(to)) return std::nullopt;
    std::int64_t dx = to.x - from.x;
    std::int64_t dy = to.y - from.y;
    for (int s = 0; s < 6; ++s) {
        if (kStepVectors[s].dx == dx && kStepVectors[s].dy == dy) {
            StepDir dir = static_cast<StepDir>(s);
            if (step_legal(from, dir)) return dir;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::array<VertexCoord, 6> hex_vertices(HexCoord h) {
    const std::int64_t q = h.q;
    const std::int64_t s = 2 * h.r + h.q;
    return {VertexCoord{3 * q + 2, s},     VertexCoord{3 * q + 1, s + 1},
            VertexCoord{3 * q - 1, s + 1}, VertexCoord{3 * q - 2, s},
            VertexCoord{3 * q - 1, s - 1}, VertexCoord{3 * q + 1, s - 1}};
}

HexCoord hex_neighbor(HexCoord h, int k) {
    const HexCoord& d = kHexNeighborOffsets[k];
    return HexCoord{h.q + d.q, h.r + d.r};
}

HexCoord hexagon_left_of(VertexCoord from, StepDir dir) {
    // Steps NW, W, SW, SE, E, NE run along corners k -> k+1 for
    // k = 0, 1, 2, 3, 4, 5 of the hexagon on their left. Recover (q, s) of
    // that hexagon from the corner formula, then r = (s - q) / 2.
    std::int64_t q = 0, s = 0;
    switch (dir) {
    case StepDir::NW: q = (from.x - 2) / 3; s = from.y; break;
    case StepDir::W:  q = (from.x - 1) / 3; s = from.y - 1; break;
    case StepDir::SW: q = (from.x + 1) / 3; s = from.y - 1; break;
    case StepDir::SE: q = (from.x + 2) / 3; s = from.y; break;
    case StepDir::E:  q = (from.x + 1) / 3; s = from.y + 1; break;
    case StepDir::NE: q = (from.x - 1) / 3; s = from.y + 1; break;
    }
    return HexCoord{q, (s - q) / 2};
}

EdgeClass edge_class(VertexCoord from, VertexCoord to) {
    if (step_between(from, to).has_value()) {
        std::int64_t dx = to.x - from.x;
        std::int64_t dy = to.y - from.y;
        if (dy == 0) return EdgeClass::D1;
        return (dx == dy) ? EdgeClass::D2 : EdgeClass::D3;
    }
    throw Error(ErrorCode::NotALatticeEdge,
                coord_str(from) + " -> " + coord_str(to) + " is not a lattice edge");
}

VertexCoord rotate120(VertexCoord v) {
    return VertexCoord{(-v.x - 3 * v.y) / 2, (v.x - v.y) / 2};
}

EdgeClass rotate120_class(EdgeClass cls) {
    switch (cls) {
    case EdgeClass::D1: return EdgeClass::D3;
    case EdgeClass::D3: return EdgeClass::D2;
    case EdgeClass::D2: return EdgeClass::D1;
    }
    return EdgeClass::D1; // unreachable
}

HexCoord rotate120_hex(HexCoord h) { return HexCoord{-h.q - h.r, h.q}; }

std::uint64_t hash_mix(std::uint64_t v) {
    v ^= v >> 30;
    v *= 0xBF58476D1CE4E5B9ull;
    v ^= v >> 27;
    v *= 0x94D049BB133111EBull;
    v ^= v >> 31;
    return v;
}

} // namespace hexcut
