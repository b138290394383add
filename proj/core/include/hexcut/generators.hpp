// generators.hpp — parametric benzenoid families and seeded random growth.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hexcut/lattice.hpp"

namespace hexcut {

// Deterministic 64-bit generator used for all randomized construction, so
// corpora are reproducible across platforms:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
//   z = (z ^ z>>27) * 0x94D049BB133111EB;  return z ^ z>>31
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

struct FamilySpec {
    enum class Kind {
        Single,         // one hexagon
        LinearChain,    // p1 hexagons in a row
        Parallelogram,  // p1 x p2 rhombus
        Triangulene,    // triangle of side p1
        Circumcoronene, // hexagon-shaped H_k, k = p1
        Random,         // p1 hexagons, seeded accretion
    };

    Kind kind = Kind::Single;
    std::int64_t p1 = 1;
    std::int64_t p2 = 1;
    std::uint64_t seed = 0;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Hexagon sets:
//   linear_chain(h)     {(i,0) : 0 <= i < h}
//   parallelogram(p,q)  {(i,j) : 0 <= i < p, 0 <= j < q}
//   triangulene(k)      {(i,j) : i,j >= 0, i+j < k}
//   circumcoronene(k)   {(q,r) : |q| < k, |r| < k, |q+r| < k}
//   random(c, seed)     accretion of boundary-adjacent hexagons, rejecting
//                       any addition that breaks simple connectivity
// Throws InvalidParameter on out-of-range parameters.
std::vector<HexCoord> generate(const FamilySpec& spec);

// "single", "linear_chain:4", "parallelogram:3:2", "triangulene:3",
// "circumcoronene:2", "random:30:12345" (count:seed).
FamilySpec parse_family_spec(std::string_view text);
std::string family_spec_name(const FamilySpec& spec);

} // namespace hexcut
