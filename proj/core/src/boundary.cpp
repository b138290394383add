#include "hexcut/boundary.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "hexcut/errors.hpp"

namespace hexcut {

namespace {

std::string coord_str(VertexCoord v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::int64_t raw_shoelace(const std::vector<VertexCoord>& verts) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const VertexCoord& a = verts[i];
        const VertexCoord& b = verts[(i + 1) % verts.size()];
        sum += a.x * b.y - b.x * a.y;
    }
    return sum; // always even on this lattice
}

} // namespace

BoundaryCycle BoundaryCycle::from_vertex_loop(std::vector<VertexCoord> verts) {
    if (verts.size() < 6)
        throw Error(ErrorCode::TooShort,
                    "cycle has " + std::to_string(verts.size()) + " vertices, need at least 6");
    if (verts.size() % 2 != 0)
        throw Error(ErrorCode::NotClosed, "odd cycle length " + std::to_string(verts.size()) +
                                              " is impossible on the bipartite lattice");
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const VertexCoord& a = verts[i];
        const VertexCoord& b = verts[(i + 1) % verts.size()];
        if (!step_between(a, b).has_value())
            throw Error(ErrorCode::IllegalStep,
                        coord_str(a) + " -> " + coord_str(b) + " is not a legal lattice step");
    }
    std::unordered_set<VertexCoord> seen;
    seen.reserve(verts.size() * 2);
    for (const VertexCoord& v : verts) {
        if (!seen.insert(v).second)
            throw Error(ErrorCode::NotSimple, "vertex " + coord_str(v) + " visited twice");
    }
    if (raw_shoelace(verts) < 0) {
        // Clockwise input: reverse the tail so the start vertex stays first.
        std::reverse(verts.begin() + 1, verts.end());
    }
    BoundaryCycle c;
    c.verts_ = std::move(verts);
    return c;
}

std::int64_t BoundaryCycle::shoelace_sum() const { return raw_shoelace(verts_) / 2; }

bool operator==(const BoundaryCycle& a, const BoundaryCycle& b) {
    const std::size_t n = a.verts_.size();
    if (n != b.verts_.size()) return false;
    if (n == 0) return true;
    // vertices are distinct, so the anchor occurs at most once in b
    std::size_t offset = n;
    for (std::size_t i = 0; i < n; ++i)
        if (b.verts_[i] == a.verts_[0]) {
            offset = i;
            break;
        }
    if (offset == n) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (a.verts_[i] != b.verts_[(offset + i) % n]) return false;
    return true;
}

BoundaryCycle parse_word(const BoundaryWord& word) {
    if (word.steps.size() < 6)
        throw Error(ErrorCode::TooShort,
                    "boundary word has " + std::to_string(word.steps.size()) +
                        " steps, need at least 6");
    if (!is_lattice_vertex(word.start))
        throw Error(ErrorCode::IllegalStep,
                    "start vertex " + coord_str(word.start) + " is not a lattice vertex");
    std::vector<VertexCoord> verts;
    verts.reserve(word.steps.size());
    VertexCoord pos = word.start;
    for (std::size_t i = 0; i < word.steps.size(); ++i) {
        char c = word.steps[i];
        if (c < '0' || c > '5')
            throw Error(ErrorCode::IllegalStep,
                        std::string("invalid step symbol '") + c + "' at position " +
                            std::to_string(i));
        StepDir dir = static_cast<StepDir>(c - '0');
        if (!step_legal(pos, dir))
            throw Error(ErrorCode::IllegalStep, std::string("step '") + c + "' at position " +
                                                    std::to_string(i) + " is illegal at " +
                                                    coord_str(pos));
        verts.push_back(pos);
        pos = apply_step(pos, dir);
    }
    if (pos != word.start)
        throw Error(ErrorCode::NotClosed,
                    "walk ends at " + coord_str(pos) + ", expected " + coord_str(word.start));
    return BoundaryCycle::from_vertex_loop(std::move(verts));
}

BoundaryWord emit_word(const BoundaryCycle& cycle) {
    const std::vector<VertexCoord>& v = cycle.vertices();
    std::size_t min_idx = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[min_idx]) min_idx = i;

    BoundaryWord word;
    word.start = v[min_idx];
    word.steps.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const VertexCoord& a = v[(min_idx + i) % v.size()];
        const VertexCoord& b = v[(min_idx + i + 1) % v.size()];
        word.steps.push_back(static_cast<char>('0' + static_cast<int>(*step_between(a, b))));
    }
    return word;
}

BoundaryCycle from_hexagons(std::span<const HexCoord> hexes) {
    if (hexes.empty())
        throw Error(ErrorCode::InvalidParameter, "hexagon set is empty");
    std::unordered_set<HexCoord> set(hexes.begin(), hexes.end());

    // Edge-connectivity over hexagon adjacency.
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
            throw Error(ErrorCode::NotConnected,
                        "hexagon set has " + std::to_string(set.size()) + " hexagons but only " +
                            std::to_string(visited.size()) + " are edge-connected to the first");
    }

    // Count vertices and edges of the union and collect boundary directed
    // edges. Each hexagon's corners run CCW, so a boundary edge oriented along
    // its owning hexagon keeps the interior on the left; following successor
    // pointers then traces the outer face counterclockwise.
    std::unordered_set<VertexCoord> verts;
    std::unordered_map<VertexCoord, VertexCoord> succ;
    std::int64_t edge_count = 0;
    verts.reserve(set.size() * 8);
    succ.reserve(set.size() * 4);
    for (const HexCoord& h : set) {
        std::array<VertexCoord, 6> corner = hex_vertices(h);
        for (int k = 0; k < 6; ++k) {
            verts.insert(corner[k]);
            HexCoord nb = hex_neighbor(h, k);
            if (!set.contains(nb)) {
                ++edge_count;
                succ[corner[k]] = corner[(k + 1) % 6];
            } else if (nb < h) {
                ++edge_count; // shared edge, counted once
            }
        }
    }

    const std::int64_t n = static_cast<std::int64_t>(verts.size());
    const std::int64_t h = static_cast<std::int64_t>(set.size());
    if (n - edge_count + h != 1)
        throw Error(ErrorCode::HasHoles, "Euler check n - m + h = " +
                                             std::to_string(n - edge_count + h) +
                                             " != 1; the union is not simply connected");

    VertexCoord start = succ.begin()->first;
    for (const auto& [from, to] : succ)
        if (from < start) start = from;

    std::vector<VertexCoord> loop;
    loop.reserve(succ.size());
    VertexCoord cur = start;
    do {
        loop.push_back(cur);
        cur = succ.at(cur);
    } while (cur != start);
    if (loop.size() != succ.size())
        throw Error(ErrorCode::HasHoles, "boundary splits into several cycles");

    return BoundaryCycle::from_vertex_loop(std::move(loop));
}

std::vector<HexCoord> hexagons_of(const BoundaryCycle& cycle) {
    const std::vector<VertexCoord>& v = cycle.vertices();
    const std::size_t len = v.size();

    // Undirected boundary edges, keyed by their smaller endpoint + step.
    auto edge_key = [](VertexCoord a, VertexCoord b) {
        if (b < a) std::swap(a, b);
        return std::pair<VertexCoord, VertexCoord>(a, b);
    };
    struct PairHash {
        std::size_t operator()(const std::pair<VertexCoord, VertexCoord>& p) const {
            return hash_mix(std::hash<VertexCoord>{}(p.first) * 0x9E3779B97F4A7C15ull ^
                            std::hash<VertexCoord>{}(p.second));
        }
    };
    std::unordered_set<std::pair<VertexCoord, VertexCoord>, PairHash> boundary_edges;
    boundary_edges.reserve(len * 2);
    for (std::size_t i = 0; i < len; ++i)
        boundary_edges.insert(edge_key(v[i], v[(i + 1) % len]));

    // The walk is CCW, so the hexagon left of each directed boundary edge is
    // inside. Flood from those seeds across edges not on the boundary.
    std::unordered_set<HexCoord> inside;
    std::vector<HexCoord> queue;
    for (std::size_t i = 0; i < len; ++i) {
        HexCoord h = hexagon_left_of(v[i], *step_between(v[i], v[(i + 1) % len]));
        if (inside.insert(h).second) queue.push_back(h);
    }
    while (!queue.empty()) {
        HexCoord h = queue.back();
        queue.pop_back();
        std::array<VertexCoord, 6> corner = hex_vertices(h);
        for (int k = 0; k < 6; ++k) {
            if (boundary_edges.contains(edge_key(corner[k], corner[(k + 1) % 6]))) continue;
            HexCoord nb = hex_neighbor(h, k);
            if (inside.insert(nb).second) queue.push_back(nb);
        }
    }

    std::vector<HexCoord> out(inside.begin(), inside.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hexcut
