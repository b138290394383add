// formats.hpp — the two newline-delimited ASCII input formats.
//
// HEXBOUND v1:            HEXLIST v1:
//   HEXBOUND 1              HEXLIST 1
//   X Y                     q r        (one hexagon per line)
//   0415...                 ...
//
// Parsers are strict: exact header, exact field counts, no duplicate
// hexagons, no trailing garbage.
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hexcut/boundary.hpp"
#include "hexcut/lattice.hpp"

namespace hexcut {

BoundaryWord parse_hexbound(std::string_view text);
std::string write_hexbound(const BoundaryWord& word);

std::vector<HexCoord> parse_hexlist(std::string_view text);
// Hexagons are emitted sorted by (q, r) so output bytes are deterministic.
std::string write_hexlist(std::span<const HexCoord> hexes);

enum class InputFormat { HexList, HexBound };

// Sniffs the header line. Throws ParseError when it is neither format.
InputFormat detect_format(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace hexcut
