#include "commands.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "hexcut/boundary.hpp"
#include "hexcut/brute_force.hpp"
#include "hexcut/formats.hpp"
#include "hexcut/generators.hpp"
#include "hexcut/indices.hpp"
#include "hexcut/render.hpp"
#include "report.hpp"

namespace hexcut::cli {

namespace {

using clock_type = std::chrono::steady_clock;

std::int64_t us_between(clock_type::time_point a, clock_type::time_point b) {
    return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count();
}

struct LoadedInput {
    BoundaryCycle cycle;
    std::vector<HexCoord> hexes; // filled lazily for hexbound inputs
    std::string format;          // "hexlist" or "hexbound"
    std::int64_t parse_us = 0;
};

InputFormat resolve_format(const std::string& flag, const std::string& text) {
    if (flag == "hexlist") return InputFormat::HexList;
    if (flag == "hexbound") return InputFormat::HexBound;
    if (flag == "auto") return detect_format(text);
    throw Error(ErrorCode::InvalidParameter, "unknown format \"" + flag + "\"");
}

// Reads and parses an input file. File I/O is excluded from parse_us.
LoadedInput load_input(const std::string& path, const std::string& format_flag) {
    const std::string text = read_file(path);
    const InputFormat format = resolve_format(format_flag, text);
    LoadedInput in;
    const auto t0 = clock_type::now();
    if (format == InputFormat::HexList) {
        in.hexes = parse_hexlist(text);
        in.cycle = from_hexagons(in.hexes);
        in.format = "hexlist";
    } else {
        in.cycle = parse_word(parse_hexbound(text));
        in.format = "hexbound";
    }
    in.parse_us = us_between(t0, clock_type::now());
    return in;
}

const std::vector<HexCoord>& hexes_of(LoadedInput& in) {
    if (in.hexes.empty()) in.hexes = hexagons_of(in.cycle);
    return in.hexes;
}

IndexReport oracle_report(const std::vector<HexCoord>& hexes, const BoundaryCycle& cycle) {
    const auto t0 = clock_type::now();
    ExplicitGraph g = build_graph(hexes);
    BruteForceIndices bf = brute_force_indices(g);
    IndexReport report;
    report.vertices = g.vertex_count();
    report.edges = g.edge_count();
    report.boundary_length = static_cast<std::int64_t>(cycle.length());
    report.hexagons = static_cast<std::int64_t>(hexes.size());
    report.wiener = bf.wiener;
    report.edge_wiener = bf.edge_wiener;
    report.edge_wiener_hat = bf.edge_wiener_hat;
    report.szeged = bf.szeged;
    report.edge_szeged = bf.edge_szeged;
    report.pi = bf.pi;
    report.vertex_pi = bf.vertex_pi;
    report.method = "oracle";
    report.timings.indices_us = us_between(t0, clock_type::now());
    report.timings.total_us = report.timings.indices_us;
    return report;
}

struct IndexRow {
    const char* name;
    i128 fast;
    i128 oracle;
};

std::vector<IndexRow> index_rows(const IndexReport& fast, const IndexReport& oracle) {
    return {
        {"wiener", fast.wiener, oracle.wiener},
        {"edge_wiener", fast.edge_wiener, oracle.edge_wiener},
        {"szeged", fast.szeged, oracle.szeged},
        {"edge_szeged", fast.edge_szeged, oracle.edge_szeged},
        {"pi", fast.pi, oracle.pi},
        {"vertex_pi", fast.vertex_pi, oracle.vertex_pi},
    };
}

} // namespace

int exit_code_for(const Error& error) {
    switch (error.code()) {
    case ErrorCode::BoundExceeded: return 3;
    case ErrorCode::Overflow: return 4;
    default: return 2;
    }
}

int cmd_compute(const ComputeOptions& opts) {
    LoadedInput in = load_input(opts.input_path, opts.format);

    IndexReport report;
    if (opts.method == "fast") {
        report = compute_all(in.cycle, opts.parallel);
    } else if (opts.method == "oracle") {
        report = oracle_report(hexes_of(in), in.cycle);
    } else {
        throw Error(ErrorCode::InvalidParameter, "unknown method \"" + opts.method + "\"");
    }
    report.timings.parse_us = in.parse_us;
    report.timings.total_us += in.parse_us;

    std::string text = to_json(make_document(report, in.format)).dump(2) + "\n";
    if (opts.out_path.empty())
        std::cout << text;
    else
        write_file(opts.out_path, text);
    return 0;
}

int cmd_check(const CheckOptions& opts) {
    struct Item {
        std::string label;
        std::vector<HexCoord> hexes;
        BoundaryCycle cycle;
    };
    std::vector<Item> items;
    if (!opts.input_path.empty()) {
        LoadedInput in = load_input(opts.input_path, opts.format);
        items.push_back({opts.input_path, hexes_of(in), in.cycle});
    }
    for (const std::string& spec_text : opts.corpus) {
        FamilySpec spec = parse_family_spec(spec_text);
        std::vector<HexCoord> hexes = generate(spec);
        BoundaryCycle cycle = from_hexagons(hexes);
        items.push_back({family_spec_name(spec), std::move(hexes), std::move(cycle)});
    }
    if (items.empty())
        throw Error(ErrorCode::InvalidParameter, "check needs --input or --corpus");

    bool all_ok = true;
    for (std::size_t i = 0; i < items.size(); ++i) {
        Item& item = items[i];
        IndexReport fast = compute_all(item.cycle);
        if (opts.corrupt_fast && i == 0) fast.szeged += 1;
        IndexReport oracle = oracle_report(item.hexes, item.cycle);

        std::vector<IndexRow> rows = index_rows(fast, oracle);
        std::size_t agree = 0;
        for (const IndexRow& r : rows)
            if (r.fast == r.oracle) ++agree;
        if (agree == rows.size()) {
            std::cout << item.label << ": OK " << agree << "/" << rows.size()
                      << " indices agree\n";
        } else {
            all_ok = false;
            std::cout << item.label << ": MISMATCH " << agree << "/" << rows.size()
                      << " indices agree\n";
            std::printf("  %-16s %-24s %-24s\n", "index", "fast", "oracle");
            for (const IndexRow& r : rows)
                if (r.fast != r.oracle)
                    std::printf("  %-16s %-24s %-24s\n", r.name, to_string(r.fast).c_str(),
                                to_string(r.oracle).c_str());
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_gen(const GenOptions& opts) {
    std::string spec_text = opts.family;
    if (!opts.params.empty()) {
        spec_text += ":";
        for (char c : opts.params) spec_text += (c == ',') ? ':' : c;
    }
    if (opts.family == "random") spec_text += ":" + std::to_string(opts.seed);
    FamilySpec spec = parse_family_spec(spec_text);

    std::vector<HexCoord> hexes = generate(spec);
    write_file(opts.out_path, write_hexlist(hexes));
    if (!opts.boundary_path.empty())
        write_file(opts.boundary_path, write_hexbound(emit_word(from_hexagons(hexes))));
    return 0;
}

int cmd_bench(const BenchOptions& opts) {
    if (opts.reps < 1) throw Error(ErrorCode::InvalidParameter, "bench needs --reps >= 1");
    std::vector<std::int64_t> ks;
    {
        std::stringstream ss{opts.k_list};
        std::string token;
        while (std::getline(ss, token, ',')) {
            FamilySpec probe = parse_family_spec(opts.family + ":" + token);
            ks.push_back(probe.p1);
        }
    }
    if (ks.empty()) throw Error(ErrorCode::InvalidParameter, "empty --k-list");

    std::ostringstream csv;
    csv << "k,vertices,boundary,rep,phase,us\n";
    for (std::int64_t k : ks) {
        FamilySpec spec = parse_family_spec(opts.family + ":" + std::to_string(k));
        // Input materialization is setup, not measurement: the timed path
        // starts from the serialized boundary word.
        BoundaryWord word = emit_word(from_hexagons(generate(spec)));
        for (int rep = 0; rep <= opts.reps; ++rep) {
            const auto t0 = clock_type::now();
            BoundaryCycle cycle = parse_word(word);
            const std::int64_t parse_us = us_between(t0, clock_type::now());
            IndexReport report = compute_all(cycle);
            if (rep == 0) continue; // discard the warm-up rep
            const std::int64_t total =
                parse_us + report.timings.trees_us + report.timings.indices_us;
            auto row = [&](const char* phase, std::int64_t us) {
                csv << k << ',' << report.vertices << ',' << report.boundary_length << ','
                    << rep << ',' << phase << ',' << us << '\n';
            };
            row("parse", parse_us);
            row("trees", report.timings.trees_us);
            row("indices", report.timings.indices_us);
            row("total", total);
        }
    }
    if (opts.csv_path.empty())
        std::cout << csv.str();
    else
        write_file(opts.csv_path, csv.str());
    return 0;
}

int cmd_render(const RenderOptions& opts) {
    std::optional<EdgeClass> direction;
    if (opts.direction == "1") direction = EdgeClass::D1;
    else if (opts.direction == "2") direction = EdgeClass::D2;
    else if (opts.direction == "3") direction = EdgeClass::D3;
    else if (opts.direction != "all")
        throw Error(ErrorCode::InvalidParameter,
                    "--direction must be 1, 2, 3 or all, got \"" + opts.direction + "\"");

    LoadedInput in = load_input(opts.input_path, opts.format);
    write_file(opts.out_path, render_svg(in.cycle, direction));
    return 0;
}

} // namespace hexcut::cli
