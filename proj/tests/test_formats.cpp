#include <doctest.h>

#include "helpers.hpp"
#include "hexcut/boundary.hpp"
#include "hexcut/errors.hpp"
#include "hexcut/formats.hpp"

using namespace hexcut;
using namespace hexcut::testing;

TEST_CASE("hexbound: benzene round trip, exact bytes") {
    BoundaryCycle c = from_hexagons(std::vector<HexCoord>{{0, 0}});
    std::string text = write_hexbound(emit_word(c));
    CHECK(text == "HEXBOUND 1\n-2 0\n501234\n");
    CHECK(parse_word(parse_hexbound(text)) == c);
}

TEST_CASE("hexbound: malformed inputs") {
    CHECK_THROWS_WITH_AS(parse_hexbound("HEXBOUND 2\n-2 0\n501234\n"),
                         doctest::Contains("ParseError"), Error);
    CHECK_THROWS_AS(parse_hexbound("HEXBOUND 1\n-2 0\n"), Error);
    CHECK_THROWS_AS(parse_hexbound("HEXBOUND 1\n-2 zero\n501234\n"), Error);
    CHECK_THROWS_AS(parse_hexbound("HEXBOUND 1\n-2 0\n501234\nmore\n"), Error);
    CHECK_THROWS_AS(parse_hexbound("HEXBOUND 1\n-2 0\n501234\n\n"), Error);
    CHECK_THROWS_AS(parse_hexbound("HEXBOUND 1\n-2 0\n5016a4\n"), Error);
    CHECK_THROWS_AS(parse_hexbound("HEXBOUND 1\n-2 0 0\n501234\n"), Error);
}

TEST_CASE("hexlist: round trip, sorted deterministic output") {
    std::vector<HexCoord> hexes = {{1, 0}, {0, 0}, {-1, 2}};
    std::string text = write_hexlist(hexes);
    CHECK(text == "HEXLIST 1\n-1 2\n0 0\n1 0\n");
    CHECK(parse_hexlist(text) == std::vector<HexCoord>{{-1, 2}, {0, 0}, {1, 0}});
}

TEST_CASE("hexlist: malformed inputs") {
    CHECK_THROWS_WITH_AS(parse_hexlist("HEXLIST 1\n0 0\n0 0\n"), doctest::Contains("duplicate"),
                         Error);
    CHECK_THROWS_AS(parse_hexlist("HEXLIST 1\n"), Error);
    CHECK_THROWS_AS(parse_hexlist("HEXLIST 1\n0\n"), Error);
    CHECK_THROWS_AS(parse_hexlist("HEXLIST 1\n0 0 0\n"), Error);
    CHECK_THROWS_AS(parse_hexlist("HEXLIST 1\n0 0\n \n"), Error);
    CHECK_THROWS_AS(parse_hexlist("nonsense\n0 0\n"), Error);
}

TEST_CASE("format detection") {
    CHECK(detect_format("HEXLIST 1\n0 0\n") == InputFormat::HexList);
    CHECK(detect_format("HEXBOUND 1\n-2 0\n501234\n") == InputFormat::HexBound);
    CHECK_THROWS_AS(detect_format("HEXGRID 1\n"), Error);
}

TEST_CASE("serialized words stay canonical across the corpus") {
    for (const CorpusEntry& entry : small_corpus()) {
        CAPTURE(entry.name);
        BoundaryCycle c = from_hexagons(entry.hexes);
        std::string text = write_hexbound(emit_word(c));
        CHECK(write_hexbound(emit_word(parse_word(parse_hexbound(text)))) == text);

        std::string list = write_hexlist(entry.hexes);
        CHECK(write_hexlist(parse_hexlist(list)) == list);
    }
}
