// lattice.hpp — exact integer coordinates for the hexagonal lattice.
//
// Vertices live in a doubled integer frame: a vertex (X, Y) sits at the true
// planar position (X/2, sqrt(3)/2 * Y). In this frame every lattice vertex
// satisfies
//
//   X + Y even,   X mod 3 in {1, 2}
//
// and the three edge directions are the integer displacements
//
//   D1 = +-(2, 0),   D2 = +-(1, 1),   D3 = +-(1, -1).
//
// Vertices with X = 2 (mod 3) admit the steps (2,0), (-1,1), (-1,-1); vertices
// with X = 1 (mod 3) admit (-2,0), (1,1), (1,-1). All functions here are pure.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

namespace hexcut {

struct HexCoord {
    std::int64_t q = 0; // axial column
    std::int64_t r = 0; // axial row

    friend bool operator==(const HexCoord&, const HexCoord&) = default;
    friend auto operator<=>(const HexCoord&, const HexCoord&) = default;
};

struct VertexCoord {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const VertexCoord&, const VertexCoord&) = default;
    friend auto operator<=>(const VertexCoord&, const VertexCoord&) = default;
};

enum class EdgeClass : std::uint8_t { D1 = 0, D2 = 1, D3 = 2 };

constexpr std::array<EdgeClass, 3> kAllEdgeClasses = {EdgeClass::D1, EdgeClass::D2,
                                                      EdgeClass::D3};

// Step symbols 0..5 map to the displacement vectors
// (2,0), (1,1), (-1,1), (-2,0), (-1,-1), (1,-1) in that order.
enum class StepDir : std::uint8_t { E = 0, NE = 1, NW = 2, W = 3, SW = 4, SE = 5 };

struct StepVector {
    std::int64_t dx;
    std::int64_t dy;
};

StepVector step_vector(StepDir dir);

// 1 or 2: the residue of x mod 3. Lattice vertices never have residue 0.
int vertex_type(VertexCoord v);

bool is_lattice_vertex(VertexCoord v);

// True when `dir` is a legal step out of `from` (legality depends only on
// the vertex type of `from`).
bool step_legal(VertexCoord from, StepDir dir);

VertexCoord apply_step(VertexCoord from, StepDir dir);

// The step taking `from` to `to`, or nullopt when they are not joined by a
// lattice edge.
std::optional<StepDir> step_between(VertexCoord from, VertexCoord to);

// The six corners of hexagon h in counterclockwise order. With s = 2r + q the
// first corner is (3q+2, s); consecutive corners are lattice-adjacent.
std::array<VertexCoord, 6> hex_vertices(HexCoord h);

// Axial neighbors of a hexagon, indexed so that neighbor k shares the edge
// between corners k and k+1 of hex_vertices.
constexpr std::array<HexCoord, 6> kHexNeighborOffsets = {
    HexCoord{1, 0}, HexCoord{0, 1}, HexCoord{-1, 1},
    HexCoord{-1, 0}, HexCoord{0, -1}, HexCoord{1, -1}};

HexCoord hex_neighbor(HexCoord h, int k);

// The hexagon lying to the left of the directed edge from -> apply_step(from,
// dir). Well-defined for every legal step; the hexagon need not belong to any
// particular benzenoid.
HexCoord hexagon_left_of(VertexCoord from, StepDir dir);

// Classifies the displacement to - from up to sign. Throws NotALatticeEdge
// when the pair is not an edge of the lattice.
EdgeClass edge_class(VertexCoord from, VertexCoord to);

// 120-degree rotation (X, Y) -> ((-X - 3Y)/2, (X - Y)/2). Applied three times
// it is the identity; edge classes cycle D1 -> D3 -> D2 -> D1.
VertexCoord rotate120(VertexCoord v);

// The image of an edge class under rotate120 applied to both endpoints.
EdgeClass rotate120_class(EdgeClass cls);

// 120-degree rotation in hexagon coordinates, consistent with rotate120 on
// the corner vertices: (q, r) -> (-q - r, q).
HexCoord rotate120_hex(HexCoord h);

std::uint64_t hash_mix(std::uint64_t v);

} // namespace hexcut

template <>
struct std::hash<hexcut::VertexCoord> {
    std::size_t operator()(const hexcut::VertexCoord& v) const noexcept {
        return hexcut::hash_mix(static_cast<std::uint64_t>(v.x) * 0x9E3779B97F4A7C15ull ^
                                static_cast<std::uint64_t>(v.y));
    }
};

template <>
struct std::hash<hexcut::HexCoord> {
    std::size_t operator()(const hexcut::HexCoord& h) const noexcept {
        return hexcut::hash_mix(static_cast<std::uint64_t>(h.q) * 0xBF58476D1CE4E5B9ull ^
                                static_cast<std::uint64_t>(h.r));
    }
};
