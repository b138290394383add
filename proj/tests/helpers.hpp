// helpers.hpp — shared test utilities: corpus construction, canonical tree
// encodings, cycle transforms, random weighted trees.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hexcut/boundary.hpp"
#include "hexcut/generators.hpp"
#include "hexcut/indices.hpp"
#include "hexcut/num128.hpp"
#include "hexcut/quotient.hpp"
#include "hexcut/weighted_tree.hpp"

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<hexcut::i128> {
    static String convert(const hexcut::i128& value) {
        return String(hexcut::to_string(value).c_str());
    }
};
} // namespace doctest
#endif

namespace hexcut::testing {

// Canonical string encoding of a weighted quotient tree, rooted at the
// weighted centroid (ties broken by taking the lexicographically smallest
// encoding). Two trees are isomorphic as weighted trees iff the encodings
// match.
inline std::string canonical_encoding(const QuotientTree& t) {
    const std::size_t n = t.size();
    std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>> adj(n);
    for (const QuotientTree::Edge& e : t.edges) {
        adj[e.a].emplace_back(e.b, e.weight);
        adj[e.b].emplace_back(e.a, e.weight);
    }

    std::int64_t total = 0;
    for (std::int64_t w : t.vcount) total += w;

    // Subtree weights from an arbitrary root.
    std::vector<std::int64_t> sub(t.vcount.begin(), t.vcount.end());
    std::vector<std::int32_t> order, parent(n, -1);
    {
        std::vector<std::int32_t> stack{0};
        std::vector<bool> seen(n, false);
        seen[0] = true;
        while (!stack.empty()) {
            std::int32_t u = stack.back();
            stack.pop_back();
            order.push_back(u);
            for (auto [v, w] : adj[u])
                if (!seen[v]) {
                    seen[v] = true;
                    parent[v] = u;
                    stack.push_back(v);
                }
        }
        for (std::size_t i = n; i-- > 1;) sub[parent[order[i]]] += sub[order[i]];
    }

    std::int64_t best = total + 1;
    std::vector<std::int32_t> centroids;
    for (std::size_t v = 0; v < n; ++v) {
        std::int64_t heaviest = total - sub[v];
        for (auto [c, w] : adj[v])
            if (parent[c] == static_cast<std::int32_t>(v)) heaviest = std::max(heaviest, sub[c]);
        if (heaviest < best) {
            best = heaviest;
            centroids = {static_cast<std::int32_t>(v)};
        } else if (heaviest == best) {
            centroids.push_back(static_cast<std::int32_t>(v));
        }
    }

    struct Encoder {
        const QuotientTree& t;
        const std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>>& adj;
        std::string encode(std::int32_t v, std::int32_t from) const {
            std::vector<std::string> kids;
            for (auto [c, w] : adj[v])
                if (c != from) kids.push_back("[" + std::to_string(w) + encode(c, v) + "]");
            std::sort(kids.begin(), kids.end());
            std::string out = "(" + std::to_string(t.vcount[v]);
            for (const std::string& k : kids) out += k;
            return out + ")";
        }
    } encoder{t, adj};

    std::string smallest;
    for (std::int32_t c : centroids) {
        std::string enc = encoder.encode(c, -1);
        if (smallest.empty() || enc < smallest) smallest = enc;
    }
    return smallest;
}

// Cuts of a tree as comparable tuples (level, low y, high y, multiplicity).
inline std::vector<std::array<std::int64_t, 4>> cut_signature(const QuotientTree& t) {
    std::vector<std::array<std::int64_t, 4>> cuts;
    for (const QuotientTree::Edge& e : t.edges)
        cuts.push_back({e.cut.level, std::min(e.cut.y_open, e.cut.y_close),
                        std::max(e.cut.y_open, e.cut.y_close), e.cut.multiplicity});
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

// Rebuilds the cycle starting from vertex `offset` (content is unchanged;
// exercises start-point independence).
inline BoundaryCycle rotate_start(const BoundaryCycle& z, std::size_t offset) {
    const std::vector<VertexCoord>& v = z.vertices();
    std::vector<VertexCoord> rotated;
    rotated.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) rotated.push_back(v[(offset + i) % v.size()]);
    return BoundaryCycle::from_vertex_loop(std::move(rotated));
}

inline BoundaryCycle reverse_cycle(const BoundaryCycle& z) {
    std::vector<VertexCoord> rev(z.vertices().rbegin(), z.vertices().rend());
    return BoundaryCycle::from_vertex_loop(std::move(rev));
}

// Everything except timings and method, for bit-identical output checks.
inline std::string report_signature(const IndexReport& r) {
    std::string s;
    s += std::to_string(r.vertices) + "/" + std::to_string(r.edges) + "/" +
         std::to_string(r.boundary_length) + "/" + std::to_string(r.hexagons) + "|";
    for (i128 v : {r.wiener, r.edge_wiener, r.edge_wiener_hat, r.szeged, r.edge_szeged, r.pi,
                   r.vertex_pi})
        s += to_string(v) + ",";
    for (const DirectionPartial& p : r.per_direction) {
        s += "|" + std::to_string(static_cast<int>(p.cls)) + ":" + std::to_string(p.nodes) +
             ":" + std::to_string(p.vcount_sum) + ":" + std::to_string(p.wprime_sum);
        for (i128 v : {p.wiener, p.szeged, p.edge_wiener_hat, p.edge_szeged, p.pi})
            s += ":" + to_string(v);
    }
    return s;
}

struct CorpusEntry {
    std::string name;
    std::vector<HexCoord> hexes;
};

// The full equivalence corpus: chains, parallelograms, triangulenes, small
// circumcoronenes and 200 seeded random benzenoids of up to 40 hexagons.
inline std::vector<CorpusEntry> full_corpus() {
    std::vector<CorpusEntry> out;
    auto add = [&out](const std::string& spec) {
        out.push_back({spec, generate(parse_family_spec(spec))});
    };
    for (int h = 1; h <= 8; ++h) add("linear_chain:" + std::to_string(h));
    for (int p = 1; p <= 5; ++p)
        for (int q = 1; q <= 5; ++q)
            add("parallelogram:" + std::to_string(p) + ":" + std::to_string(q));
    for (int k = 1; k <= 5; ++k) add("triangulene:" + std::to_string(k));
    for (int k = 1; k <= 3; ++k) add("circumcoronene:" + std::to_string(k));
    for (int seed = 1; seed <= 200; ++seed)
        add("random:" + std::to_string(1 + (seed * 7) % 40) + ":" + std::to_string(seed));
    return out;
}

// A cheap subset for unit tests.
inline std::vector<CorpusEntry> small_corpus() {
    std::vector<CorpusEntry> out;
    for (const char* spec :
         {"single", "linear_chain:3", "parallelogram:2:3", "triangulene:3", "circumcoronene:2",
          "random:12:5", "random:25:9", "random:40:13"})
        out.push_back({spec, generate(parse_family_spec(spec))});
    // S-shaped benzenoids: two cuts share a lattice line around one component.
    out.push_back({"zigzag", {{0, 0}, {1, 0}, {1, 1}, {0, 2}}});
    out.push_back({"c-shape", {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 2}}});
    for (CorpusEntry& entry : out) std::sort(entry.hexes.begin(), entry.hexes.end());
    return out;
}

inline WeightedTree random_weighted_tree(SplitMix64& rng, std::size_t max_nodes = 12,
                                         std::int64_t max_weight = 9) {
    const std::size_t n = 1 + rng.below(max_nodes);
    WeightedTree t;
    for (std::size_t i = 0; i < n; ++i)
        t.vertex_weight.push_back(static_cast<std::int64_t>(rng.below(max_weight + 1)));
    for (std::size_t i = 1; i < n; ++i)
        t.edges.push_back({static_cast<std::int32_t>(rng.below(i)), static_cast<std::int32_t>(i),
                           static_cast<std::int64_t>(rng.below(max_weight + 1))});
    return t;
}

} // namespace hexcut::testing
