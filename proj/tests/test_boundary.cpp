#include <doctest.h>

#include "helpers.hpp"
#include "hexcut/boundary.hpp"
#include "hexcut/errors.hpp"
#include "hexcut/generators.hpp"

using namespace hexcut;
using namespace hexcut::testing;

namespace {
const BoundaryWord kBenzeneWord{{2, 0}, "234501"};
}

TEST_CASE("parse_word: benzene perimeter") {
    BoundaryCycle c = parse_word(kBenzeneWord);
    CHECK(c.length() == 6);
    CHECK(c.hexagon_count() == 1);
    CHECK(c.shoelace_sum() == 6);
}

TEST_CASE("parse_word: corrupted words are rejected") {
    CHECK_THROWS_WITH_AS(parse_word({{2, 0}, "334501"}), doctest::Contains("IllegalStep"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_word({{2, 0}, "234503"}), doctest::Contains("NotClosed"), Error);
    CHECK_THROWS_WITH_AS(parse_word({{2, 0}, "2345"}), doctest::Contains("TooShort"), Error);
    CHECK_THROWS_WITH_AS(parse_word({{2, 0}, "234501234501"}), doctest::Contains("NotSimple"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_word({{0, 0}, "234501"}), doctest::Contains("IllegalStep"),
                         Error);
    CHECK_THROWS_AS(parse_word({{2, 0}, "2345x1"}), Error);
}

TEST_CASE("emit_word: canonical start and stability") {
    BoundaryCycle c = parse_word(kBenzeneWord);
    BoundaryWord w = emit_word(c);
    CHECK(w.start == VertexCoord{-2, 0});
    CHECK(w.steps == "501234");

    for (std::size_t offset = 0; offset < c.length(); ++offset)
        CHECK(emit_word(rotate_start(c, offset)) == w);
    CHECK(emit_word(reverse_cycle(c)) == w);
    CHECK(parse_word(w) == c);
}

TEST_CASE("from_hexagons: benzene and naphthalene") {
    CHECK(from_hexagons(std::vector<HexCoord>{{0, 0}}) == parse_word(kBenzeneWord));
    BoundaryCycle naph = from_hexagons(std::vector<HexCoord>{{0, 0}, {1, 0}});
    CHECK(naph.length() == 10);
    CHECK(naph.hexagon_count() == 2);
}

TEST_CASE("from_hexagons: hexagon ring with missing center has a hole") {
    std::vector<HexCoord> ring = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    CHECK_THROWS_WITH_AS(from_hexagons(ring), doctest::Contains("HasHoles"), Error);
}

TEST_CASE("from_hexagons: disconnected set") {
    std::vector<HexCoord> apart = {{0, 0}, {5, 5}};
    CHECK_THROWS_WITH_AS(from_hexagons(apart), doctest::Contains("NotConnected"), Error);
}

TEST_CASE("round trip and shoelace across the corpus") {
    for (const CorpusEntry& entry : small_corpus()) {
        CAPTURE(entry.name);
        BoundaryCycle c = from_hexagons(entry.hexes);
        CHECK(c.shoelace_sum() == 6 * static_cast<std::int64_t>(entry.hexes.size()));
        CHECK(c.length() % 2 == 0);
        CHECK(parse_word(emit_word(c)) == c);
        auto recovered = hexagons_of(c);
        CHECK(recovered == entry.hexes);
    }
}

TEST_CASE("circumcoronene boundary length is 12k - 6") {
    for (int k = 1; k <= 6; ++k) {
        auto hexes = generate(parse_family_spec("circumcoronene:" + std::to_string(k)));
        BoundaryCycle c = from_hexagons(hexes);
        CHECK(static_cast<std::int64_t>(c.length()) == 12 * k - 6);
    }
}
