#include "hexcut/quotient.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "hexcut/errors.hpp"
#include "hexcut/explicit_graph.hpp"

namespace hexcut {

namespace {

// How many rotate120 applications map class `cls` onto D1. rotate120 sends
// D1 -> D3 -> D2 -> D1, so D2 needs one application and D3 two.
int rotations_to_canonical(EdgeClass cls) {
    switch (cls) {
    case EdgeClass::D1: return 0;
    case EdgeClass::D2: return 1;
    case EdgeClass::D3: return 2;
    }
    return 0;
}

// A boundary edge of class D1 in the canonical frame: the walk crosses the
// vertical cut line X = level + 1 here.
struct Crossing {
    std::int64_t level; // min X of the edge's endpoints, 2 mod 3
    std::int64_t y;
};

// Assigns a cut id to every crossing. Two crossings bound the same cut iff
// they sit on the same vertical line and are adjacent in the y-order of that
// line's crossings: sorted along the line, the region alternates
// inside/outside, so crossings pair up (1st,2nd), (3rd,4th), ... Two stable
// counting sorts (by y, then by level) group them in O(|Z|) without
// comparison sorting.
std::vector<std::int32_t> match_cuts(const std::vector<Crossing>& cross,
                                     std::vector<CutRecord>& cuts, EdgeClass cls) {
    cuts.clear();
    const std::size_t c = cross.size();
    if (c == 0) return {};
    std::int64_t y_min = std::numeric_limits<std::int64_t>::max(), y_max = std::numeric_limits<std::int64_t>::min();
    std::int64_t l_min = y_min, l_max = y_max;
    for (const Crossing& x : cross) {
        y_min = std::min(y_min, x.y);
        y_max = std::max(y_max, x.y);
        l_min = std::min(l_min, x.level);
        l_max = std::max(l_max, x.level);
    }

    auto counting_sort = [c](const std::vector<std::uint32_t>& in, std::vector<std::uint32_t>& out,
                             auto key, std::size_t buckets) {
        std::vector<std::uint32_t> count(buckets + 1, 0);
        for (std::uint32_t idx : in) ++count[key(idx) + 1];
        for (std::size_t i = 1; i <= buckets; ++i) count[i] += count[i - 1];
        out.resize(c);
        for (std::uint32_t idx : in) out[count[key(idx)]++] = idx;
    };

    std::vector<std::uint32_t> ident(c), by_y, by_level;
    for (std::size_t i = 0; i < c; ++i) ident[i] = static_cast<std::uint32_t>(i);
    counting_sort(ident, by_y,
                  [&](std::uint32_t i) { return static_cast<std::size_t>(cross[i].y - y_min); },
                  static_cast<std::size_t>(y_max - y_min + 1));
    counting_sort(by_y, by_level,
                  [&](std::uint32_t i) { return static_cast<std::size_t>(cross[i].level - l_min); },
                  static_cast<std::size_t>(l_max - l_min + 1));

    // by_level is now grouped by cut line, y ascending within each group.
    std::vector<std::int32_t> cut_of(c, -1);
    std::size_t i = 0;
    while (i < c) {
        std::size_t j = i;
        while (j < c && cross[by_level[j]].level == cross[by_level[i]].level) ++j;
        if ((j - i) % 2 != 0)
            throw Error(ErrorCode::UnbalancedCuts,
                        "odd number of boundary crossings on cut line at level " +
                            std::to_string(cross[by_level[i]].level));
        for (std::size_t k = i; k < j; k += 2) {
            std::uint32_t lo = by_level[k], hi = by_level[k + 1];
            std::int32_t id = static_cast<std::int32_t>(cuts.size());
            cut_of[lo] = cut_of[hi] = id;
            CutRecord rec;
            rec.cls = cls;
            rec.level = cross[lo].level;
            // Walk-encounter order: the earlier crossing opens the cut.
            rec.y_open = lo < hi ? cross[lo].y : cross[hi].y;
            rec.y_close = lo < hi ? cross[hi].y : cross[lo].y;
            rec.multiplicity = (cross[hi].y - cross[lo].y) / 2 + 1;
            cuts.push_back(rec);
        }
        i = j;
    }
    return cut_of;
}

} // namespace

QuotientTree sweep_direction(const BoundaryCycle& z, EdgeClass cls) {
    const int rot = rotations_to_canonical(cls);
    std::vector<VertexCoord> v(z.vertices());
    for (int t = 0; t < rot; ++t)
        for (VertexCoord& p : v) p = rotate120(p);
    const std::size_t len = v.size();

    // Crossings in walk order. In the canonical frame a D1 edge is the only
    // kind with equal Y at both endpoints.
    std::vector<Crossing> cross;
    cross.reserve(len / 3 + 2);
    std::vector<std::uint32_t> cross_at; // walk index of each crossing
    cross_at.reserve(len / 3 + 2);
    for (std::size_t i = 0; i < len; ++i) {
        const VertexCoord& a = v[i];
        const VertexCoord& b = v[(i + 1) % len];
        if (a.y == b.y) {
            cross.push_back({std::min(a.x, b.x), a.y});
            cross_at.push_back(static_cast<std::uint32_t>(i));
        }
    }

    QuotientTree tree;
    tree.cls = cls;
    std::vector<CutRecord> cuts;
    std::vector<std::int32_t> cut_of = match_cuts(cross, cuts, cls);

    // Euler-tour walk over the cut tree. Crossing a cut for the first time
    // enters a fresh component; crossing it again returns to the component
    // behind it, which laminarity guarantees is the top of the stack.
    std::vector<std::int64_t> y_lo, y_hi;
    auto fresh_node = [&]() {
        y_lo.push_back(std::numeric_limits<std::int64_t>::max());
        y_hi.push_back(std::numeric_limits<std::int64_t>::min());
        return static_cast<std::int32_t>(y_lo.size() - 1);
    };

    struct OpenCut {
        std::int32_t node;
        std::int32_t cut;
    };
    std::vector<OpenCut> stack;
    std::vector<bool> cut_open(cuts.size(), false);
    std::int32_t current = fresh_node();

    std::size_t next_cross = 0;
    for (std::size_t i = 0; i < len; ++i) {
        y_lo[current] = std::min(y_lo[current], v[i].y);
        y_hi[current] = std::max(y_hi[current], v[i].y);
        if (next_cross < cross_at.size() && cross_at[next_cross] == i) {
            std::int32_t cut = cut_of[next_cross++];
            if (cut_open[cut]) {
                if (stack.empty() || stack.back().cut != cut)
                    throw Error(ErrorCode::UnbalancedCuts,
                                "cut closed out of nesting order; boundary is not a valid "
                                "benzenoid cycle");
                tree.edges.push_back(
                    {stack.back().node, current, cuts[cut].multiplicity, cuts[cut]});
                current = stack.back().node;
                stack.pop_back();
            } else {
                cut_open[cut] = true;
                stack.push_back({current, cut});
                current = fresh_node();
            }
        }
    }
    if (!stack.empty())
        throw Error(ErrorCode::UnbalancedCuts, std::to_string(stack.size()) +
                                                   " cuts still open after a full boundary walk");

    // Components of G - E_1 are Y-monotone paths whose extreme vertices lie
    // on the boundary, so the Y extent of the boundary vertices seen while a
    // component was current counts all its vertices, interior ones included.
    tree.vcount.resize(y_lo.size());
    for (std::size_t node = 0; node < y_lo.size(); ++node)
        tree.vcount[node] = y_hi[node] - y_lo[node] + 1;
    return tree;
}

std::array<QuotientTree, 3> quotient_trees(const BoundaryCycle& z) {
    return {sweep_direction(z, EdgeClass::D1), sweep_direction(z, EdgeClass::D2),
            sweep_direction(z, EdgeClass::D3)};
}

QuotientTree quotient_tree_reference(std::span<const HexCoord> hexes, EdgeClass cls) {
    ExplicitGraph g = build_graph(hexes);
    const std::size_t n = g.coords.size();

    std::vector<std::vector<std::int32_t>> adj(n);
    for (const ExplicitGraph::Edge& e : g.edges) {
        if (e.cls == cls) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }

    std::vector<std::int32_t> comp(n, -1);
    std::int32_t comp_count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::int32_t> stack{static_cast<std::int32_t>(s)};
        comp[s] = comp_count;
        while (!stack.empty()) {
            std::int32_t u = stack.back();
            stack.pop_back();
            for (std::int32_t w : adj[u])
                if (comp[w] < 0) {
                    comp[w] = comp_count;
                    stack.push_back(w);
                }
        }
        ++comp_count;
    }

    QuotientTree tree;
    tree.cls = cls;
    tree.vcount.assign(comp_count, 0);
    for (std::size_t u = 0; u < n; ++u) ++tree.vcount[comp[u]];

    // Group removed edges by component pair; the group size is w'. Geometry
    // of the cut (in the canonical frame) is reconstructed for comparison
    // against the sweep's records.
    const int rot = rotations_to_canonical(cls);
    std::map<std::pair<std::int32_t, std::int32_t>, CutRecord> groups;
    for (const ExplicitGraph::Edge& e : g.edges) {
        if (e.cls != cls) continue;
        auto key = std::minmax(comp[e.u], comp[e.v]);
        VertexCoord a = g.coords[e.u];
        for (int t = 0; t < rot; ++t) a = rotate120(a);
        VertexCoord b = g.coords[e.v];
        for (int t = 0; t < rot; ++t) b = rotate120(b);
        auto it = groups.find(key);
        if (it == groups.end()) {
            groups.emplace(key, CutRecord{cls, std::min(a.x, b.x), a.y, a.y, 1});
        } else {
            CutRecord& rec = it->second;
            rec.y_open = std::min(rec.y_open, a.y);
            rec.y_close = std::max(rec.y_close, a.y);
            rec.multiplicity += 1;
        }
    }
    for (const auto& [key, rec] : groups)
        tree.edges.push_back({key.first, key.second, rec.multiplicity, rec});

    if (tree.edges.size() + 1 != tree.vcount.size())
        throw Error(ErrorCode::UnbalancedCuts,
                    "reference quotient graph is not a tree: " + std::to_string(tree.size()) +
                        " components, " + std::to_string(tree.edges.size()) + " cuts");
    return tree;
}

} // namespace hexcut
