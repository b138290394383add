#include "hexcut/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "hexcut/errors.hpp"

namespace hexcut {

namespace {

// Splits on '\n'. A single trailing newline is allowed; anything else that
// leaves an empty or extra line is reported as trailing garbage.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            pos = text.size();
        } else {
            lines.push_back(text.substr(pos, nl - pos));
            pos = nl + 1;
        }
    }
    return lines;
}

std::int64_t parse_int(std::string_view token, std::string_view what) {
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw Error(ErrorCode::ParseError,
                    std::string(what) + ": expected integer, got \"" + std::string(token) + "\"");
    return value;
}

// A line holding exactly `count` space-separated integers.
std::vector<std::int64_t> parse_int_line(std::string_view line, std::size_t count,
                                         std::string_view what) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        std::size_t sp = line.find(' ', pos);
        std::string_view token =
            sp == std::string_view::npos ? line.substr(pos) : line.substr(pos, sp - pos);
        out.push_back(parse_int(token, what));
        pos = sp == std::string_view::npos ? line.size() : sp + 1;
    }
    if (out.size() != count)
        throw Error(ErrorCode::ParseError, std::string(what) + ": expected " +
                                               std::to_string(count) + " fields in \"" +
                                               std::string(line) + "\"");
    return out;
}

void check_header(std::span<const std::string_view> lines, std::string_view magic) {
    if (lines.empty() || lines[0] != magic)
        throw Error(ErrorCode::ParseError,
                    "missing \"" + std::string(magic) + "\" header line");
}

} // namespace

BoundaryWord parse_hexbound(std::string_view text) {
    std::vector<std::string_view> lines = split_lines(text);
    check_header(lines, "HEXBOUND 1");
    if (lines.size() < 3)
        throw Error(ErrorCode::ParseError, "HEXBOUND needs a start line and a step line");
    if (lines.size() > 3)
        throw Error(ErrorCode::ParseError,
                    "trailing garbage after HEXBOUND step line: \"" + std::string(lines[3]) + "\"");
    std::vector<std::int64_t> start = parse_int_line(lines[1], 2, "HEXBOUND start vertex");
    BoundaryWord word;
    word.start = VertexCoord{start[0], start[1]};
    word.steps = std::string(lines[2]);
    if (word.steps.empty())
        throw Error(ErrorCode::ParseError, "HEXBOUND step line is empty");
    for (char c : word.steps)
        if (c < '0' || c > '5')
            throw Error(ErrorCode::ParseError,
                        std::string("HEXBOUND step line contains '") + c +
                            "', expected symbols 0..5");
    return word;
}

std::string write_hexbound(const BoundaryWord& word) {
    std::ostringstream out;
    out << "HEXBOUND 1\n"
        << word.start.x << ' ' << word.start.y << '\n'
        << word.steps << '\n';
    return out.str();
}

std::vector<HexCoord> parse_hexlist(std::string_view text) {
    std::vector<std::string_view> lines = split_lines(text);
    check_header(lines, "HEXLIST 1");
    if (lines.size() < 2)
        throw Error(ErrorCode::ParseError, "HEXLIST holds no hexagons");
    std::vector<HexCoord> hexes;
    std::unordered_set<HexCoord> seen;
    hexes.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::int64_t> qr = parse_int_line(lines[i], 2, "HEXLIST hexagon");
        HexCoord h{qr[0], qr[1]};
        if (!seen.insert(h).second)
            throw Error(ErrorCode::ParseError, "duplicate hexagon " + std::to_string(h.q) + " " +
                                                   std::to_string(h.r) + " in HEXLIST");
        hexes.push_back(h);
    }
    return hexes;
}

std::string write_hexlist(std::span<const HexCoord> hexes) {
    std::vector<HexCoord> sorted(hexes.begin(), hexes.end());
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream out;
    out << "HEXLIST 1\n";
    for (const HexCoord& h : sorted) out << h.q << ' ' << h.r << '\n';
    return out.str();
}

InputFormat detect_format(std::string_view text) {
    if (text.starts_with("HEXLIST 1")) return InputFormat::HexList;
    if (text.starts_with("HEXBOUND 1")) return InputFormat::HexBound;
    throw Error(ErrorCode::ParseError, "input is neither HEXLIST 1 nor HEXBOUND 1");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot open " + path + " for writing");
    out << content;
    if (!out) throw Error(ErrorCode::ParseError, "failed writing " + path);
}

} // namespace hexcut
