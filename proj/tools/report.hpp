// report.hpp — the JSON report document emitted by `hexcut compute`.
//
// Index values are serialized as decimal strings so 128-bit results survive
// every JSON consumer; counts and timings are plain numbers.
#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hexcut/indices.hpp"
#include "hexcut/num128.hpp"

namespace hexcut::cli {

struct ReportDocument {
    std::string input_format; // "hexlist" or "hexbound"
    std::int64_t input_hexagons = 0;
    std::int64_t boundary_length = 0;

    std::int64_t vertices = 0;
    std::int64_t edges = 0;

    i128 wiener = 0;
    i128 edge_wiener = 0;
    i128 edge_wiener_hat = 0;
    i128 szeged = 0;
    i128 edge_szeged = 0;
    i128 pi = 0;
    i128 vertex_pi = 0;

    std::string method;
    PhaseTimings timings;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument make_document(const IndexReport& report, const std::string& input_format);

nlohmann::json to_json(const ReportDocument& doc);
ReportDocument document_from_json(const nlohmann::json& j);

} // namespace hexcut::cli
