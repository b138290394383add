#include "hexcut/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <tuple>
#include <vector>

#include "hexcut/quotient.hpp"

namespace hexcut {

namespace {

constexpr double kSqrt3Half = 0.8660254037844386;
constexpr double kScale = 28.0;
constexpr double kMargin = 24.0;

struct Pt {
    double x;
    double y;
};

// True planar position of a doubled-frame coordinate.
Pt to_plane(double x, double y) { return {x * 0.5, y * kSqrt3Half}; }

Pt rotate_plane_back(double x, double y, int times) {
    // Inverse of rotate120 applied `times` times, in the doubled frame.
    for (int t = 0; t < (3 - times) % 3; ++t) {
        double nx = (-x - 3.0 * y) / 2.0;
        double ny = (x - y) / 2.0;
        x = nx;
        y = ny;
    }
    return {x, y};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const char* class_color(EdgeClass cls) {
    switch (cls) {
    case EdgeClass::D1: return "#c62828";
    case EdgeClass::D2: return "#1565c0";
    case EdgeClass::D3: return "#2e7d32";
    }
    return "#000000";
}

} // namespace

std::string render_svg(const BoundaryCycle& z, std::optional<EdgeClass> direction) {
    struct Chord {
        Pt a;
        Pt b;
        std::int64_t label;
        EdgeClass cls;
    };
    std::vector<Chord> chords;
    for (EdgeClass cls : kAllEdgeClasses) {
        if (direction && *direction != cls) continue;
        QuotientTree tree = sweep_direction(z, cls);
        // Sorted by geometry so the bytes do not depend on the walk's start.
        std::vector<CutRecord> cuts;
        for (const QuotientTree::Edge& e : tree.edges) cuts.push_back(e.cut);
        std::sort(cuts.begin(), cuts.end(), [](const CutRecord& a, const CutRecord& b) {
            auto lo_a = std::min(a.y_open, a.y_close), lo_b = std::min(b.y_open, b.y_close);
            return std::tie(a.level, lo_a) < std::tie(b.level, lo_b);
        });
        int rot = static_cast<int>(cls);
        for (const CutRecord& cut : cuts) {
            // Chord between the midpoints of the cut's two boundary edges,
            // mapped back from the canonical frame.
            Pt a = rotate_plane_back(static_cast<double>(cut.level) + 1.0,
                                     static_cast<double>(std::min(cut.y_open, cut.y_close)),
                                     rot);
            Pt b = rotate_plane_back(static_cast<double>(cut.level) + 1.0,
                                     static_cast<double>(std::max(cut.y_open, cut.y_close)),
                                     rot);
            chords.push_back({to_plane(a.x, a.y), to_plane(b.x, b.y), cut.multiplicity, cls});
        }
    }

    // Start the polygon at the lexicographically smallest vertex so the bytes
    // do not depend on where the input word happened to begin.
    const std::vector<VertexCoord>& verts = z.vertices();
    std::size_t first = 0;
    for (std::size_t i = 1; i < verts.size(); ++i)
        if (verts[i] < verts[first]) first = i;

    std::vector<Pt> outline;
    outline.reserve(verts.size());
    double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const VertexCoord& v = verts[(first + i) % verts.size()];
        Pt p = to_plane(static_cast<double>(v.x), static_cast<double>(v.y));
        outline.push_back(p);
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }

    auto sx = [&](double x) { return (x - min_x) * kScale + kMargin; };
    auto sy = [&](double y) { return (max_y - y) * kScale + kMargin; };
    const double width = (max_x - min_x) * kScale + 2 * kMargin;
    const double height = (max_y - min_y) * kScale + 2 * kMargin;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    out << "<polygon points=\"";
    for (std::size_t i = 0; i < outline.size(); ++i) {
        if (i) out << ' ';
        out << fmt(sx(outline[i].x)) << ',' << fmt(sy(outline[i].y));
    }
    out << "\" fill=\"#f4f4f4\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";

    for (const Chord& c : chords) {
        out << "<line x1=\"" << fmt(sx(c.a.x)) << "\" y1=\"" << fmt(sy(c.a.y)) << "\" x2=\""
            << fmt(sx(c.b.x)) << "\" y2=\"" << fmt(sy(c.b.y)) << "\" stroke=\""
            << class_color(c.cls) << "\" stroke-width=\"2\" stroke-dasharray=\"5,3\"/>\n";
        double mx = (c.a.x + c.b.x) / 2.0;
        double my = (c.a.y + c.b.y) / 2.0;
        out << "<text x=\"" << fmt(sx(mx) + 4.0) << "\" y=\"" << fmt(sy(my) - 4.0)
            << "\" font-size=\"11\" font-family=\"sans-serif\" fill=\"" << class_color(c.cls)
            << "\">" << c.label << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace hexcut
