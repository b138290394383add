#include "hexcut/generators.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "hexcut/errors.hpp"

namespace hexcut {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::InvalidParameter, what);
}

// Incremental counts for the Euler simple-connectivity check. Adding hexagon
// `h` keeps the union hole-free iff n - m + h stays 1 afterwards.
struct Accretion {
    std::unordered_set<HexCoord> hexes;
    std::unordered_set<VertexCoord> verts;
    std::int64_t edge_count = 0;

    bool try_add(HexCoord h) {
        std::array<VertexCoord, 6> corner = hex_vertices(h);
        std::int64_t new_verts = 0;
        std::int64_t present_neighbors = 0;
        for (int k = 0; k < 6; ++k) {
            if (!verts.contains(corner[k])) ++new_verts;
            if (hexes.contains(hex_neighbor(h, k))) ++present_neighbors;
        }
        std::int64_t n = static_cast<std::int64_t>(verts.size()) + new_verts;
        std::int64_t m = edge_count + 6 - present_neighbors;
        std::int64_t count = static_cast<std::int64_t>(hexes.size()) + 1;
        if (n - m + count != 1) return false;
        hexes.insert(h);
        for (const VertexCoord& v : corner) verts.insert(v);
        edge_count = m;
        return true;
    }
};

std::vector<HexCoord> random_accretion(std::int64_t count, std::uint64_t seed) {
    Accretion acc;
    acc.try_add(HexCoord{0, 0});
    SplitMix64 rng(seed);
    while (static_cast<std::int64_t>(acc.hexes.size()) < count) {
        // Frontier of absent neighbors, sorted for determinism.
        std::vector<HexCoord> frontier;
        std::unordered_set<HexCoord> seen;
        for (const HexCoord& h : acc.hexes)
            for (int k = 0; k < 6; ++k) {
                HexCoord nb = hex_neighbor(h, k);
                if (!acc.hexes.contains(nb) && seen.insert(nb).second) frontier.push_back(nb);
            }
        std::sort(frontier.begin(), frontier.end());
        // Start at a random candidate, then scan cyclically until one is
        // addable. Some candidate always is, so this terminates.
        std::size_t start = static_cast<std::size_t>(rng.below(frontier.size()));
        bool added = false;
        for (std::size_t i = 0; i < frontier.size() && !added; ++i)
            added = acc.try_add(frontier[(start + i) % frontier.size()]);
        require(added, "random accretion deadlocked"); // unreachable
    }
    std::vector<HexCoord> out(acc.hexes.begin(), acc.hexes.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t parse_param(std::string_view token) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    require(ec == std::errc{} && ptr == token.data() + token.size(),
            "family parameter \"" + std::string(token) + "\" is not an integer");
    return value;
}

} // namespace

std::vector<HexCoord> generate(const FamilySpec& spec) {
    std::vector<HexCoord> out;
    switch (spec.kind) {
    case FamilySpec::Kind::Single:
        out.push_back({0, 0});
        break;
    case FamilySpec::Kind::LinearChain:
        require(spec.p1 >= 1, "linear_chain needs h >= 1");
        for (std::int64_t i = 0; i < spec.p1; ++i) out.push_back({i, 0});
        break;
    case FamilySpec::Kind::Parallelogram:
        require(spec.p1 >= 1 && spec.p2 >= 1, "parallelogram needs p, q >= 1");
        for (std::int64_t i = 0; i < spec.p1; ++i)
            for (std::int64_t j = 0; j < spec.p2; ++j) out.push_back({i, j});
        break;
    case FamilySpec::Kind::Triangulene:
        require(spec.p1 >= 1, "triangulene needs k >= 1");
        for (std::int64_t i = 0; i < spec.p1; ++i)
            for (std::int64_t j = 0; i + j < spec.p1; ++j) out.push_back({i, j});
        break;
    case FamilySpec::Kind::Circumcoronene: {
        require(spec.p1 >= 1, "circumcoronene needs k >= 1");
        const std::int64_t k = spec.p1;
        for (std::int64_t q = -k + 1; q < k; ++q)
            for (std::int64_t r = -k + 1; r < k; ++r)
                if (std::llabs(q + r) < k) out.push_back({q, r});
        break;
    }
    case FamilySpec::Kind::Random:
        require(spec.p1 >= 1, "random needs hex_count >= 1");
        return random_accretion(spec.p1, spec.seed);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FamilySpec parse_family_spec(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t colon = text.find(':', pos);
        if (colon == std::string_view::npos) {
            parts.push_back(text.substr(pos));
            break;
        }
        parts.push_back(text.substr(pos, colon - pos));
        pos = colon + 1;
    }
    require(!parts.empty() && !parts[0].empty(), "empty family spec");

    FamilySpec spec;
    std::string_view name = parts[0];
    auto arity = [&](std::size_t params) {
        require(parts.size() == params + 1, "family \"" + std::string(name) + "\" takes " +
                                                std::to_string(params) + " parameter(s)");
    };
    if (name == "single") {
        arity(0);
        spec.kind = FamilySpec::Kind::Single;
    } else if (name == "linear_chain") {
        arity(1);
        spec.kind = FamilySpec::Kind::LinearChain;
        spec.p1 = parse_param(parts[1]);
    } else if (name == "parallelogram") {
        arity(2);
        spec.kind = FamilySpec::Kind::Parallelogram;
        spec.p1 = parse_param(parts[1]);
        spec.p2 = parse_param(parts[2]);
    } else if (name == "triangulene") {
        arity(1);
        spec.kind = FamilySpec::Kind::Triangulene;
        spec.p1 = parse_param(parts[1]);
    } else if (name == "circumcoronene") {
        arity(1);
        spec.kind = FamilySpec::Kind::Circumcoronene;
        spec.p1 = parse_param(parts[1]);
    } else if (name == "random") {
        arity(2);
        spec.kind = FamilySpec::Kind::Random;
        spec.p1 = parse_param(parts[1]);
        spec.seed = static_cast<std::uint64_t>(parse_param(parts[2]));
    } else {
        throw Error(ErrorCode::InvalidParameter, "unknown family \"" + std::string(name) + "\"");
    }
    return spec;
}

std::string family_spec_name(const FamilySpec& spec) {
    switch (spec.kind) {
    case FamilySpec::Kind::Single: return "single";
    case FamilySpec::Kind::LinearChain: return "linear_chain:" + std::to_string(spec.p1);
    case FamilySpec::Kind::Parallelogram:
        return "parallelogram:" + std::to_string(spec.p1) + ":" + std::to_string(spec.p2);
    case FamilySpec::Kind::Triangulene: return "triangulene:" + std::to_string(spec.p1);
    case FamilySpec::Kind::Circumcoronene: return "circumcoronene:" + std::to_string(spec.p1);
    case FamilySpec::Kind::Random:
        return "random:" + std::to_string(spec.p1) + ":" + std::to_string(spec.seed);
    }
    return "?";
}

} // namespace hexcut
