#include "report.hpp"

namespace hexcut::cli {

using nlohmann::json;

ReportDocument make_document(const IndexReport& report, const std::string& input_format) {
    ReportDocument doc;
    doc.input_format = input_format;
    doc.input_hexagons = report.hexagons;
    doc.boundary_length = report.boundary_length;
    doc.vertices = report.vertices;
    doc.edges = report.edges;
    doc.wiener = report.wiener;
    doc.edge_wiener = report.edge_wiener;
    doc.edge_wiener_hat = report.edge_wiener_hat;
    doc.szeged = report.szeged;
    doc.edge_szeged = report.edge_szeged;
    doc.pi = report.pi;
    doc.vertex_pi = report.vertex_pi;
    doc.method = report.method;
    doc.timings = report.timings;
    return doc;
}

json to_json(const ReportDocument& doc) {
    return json{
        {"input",
         {{"format", doc.input_format},
          {"hexagons", doc.input_hexagons},
          {"boundary_length", doc.boundary_length}}},
        {"counts", {{"vertices", doc.vertices}, {"edges", doc.edges}}},
        {"indices",
         {{"wiener", to_string(doc.wiener)},
          {"edge_wiener", to_string(doc.edge_wiener)},
          {"edge_wiener_hat", to_string(doc.edge_wiener_hat)},
          {"szeged", to_string(doc.szeged)},
          {"edge_szeged", to_string(doc.edge_szeged)},
          {"pi", to_string(doc.pi)},
          {"vertex_pi", to_string(doc.vertex_pi)}}},
        {"method", doc.method},
        {"timings_us",
         {{"parse", doc.timings.parse_us},
          {"trees", doc.timings.trees_us},
          {"indices", doc.timings.indices_us},
          {"total", doc.timings.total_us}}},
    };
}

ReportDocument document_from_json(const json& j) {
    ReportDocument doc;
    const json& input = j.at("input");
    doc.input_format = input.at("format").get<std::string>();
    doc.input_hexagons = input.at("hexagons").get<std::int64_t>();
    doc.boundary_length = input.at("boundary_length").get<std::int64_t>();
    const json& counts = j.at("counts");
    doc.vertices = counts.at("vertices").get<std::int64_t>();
    doc.edges = counts.at("edges").get<std::int64_t>();
    const json& idx = j.at("indices");
    doc.wiener = i128_from_string(idx.at("wiener").get<std::string>());
    doc.edge_wiener = i128_from_string(idx.at("edge_wiener").get<std::string>());
    doc.edge_wiener_hat = i128_from_string(idx.at("edge_wiener_hat").get<std::string>());
    doc.szeged = i128_from_string(idx.at("szeged").get<std::string>());
    doc.edge_szeged = i128_from_string(idx.at("edge_szeged").get<std::string>());
    doc.pi = i128_from_string(idx.at("pi").get<std::string>());
    doc.vertex_pi = i128_from_string(idx.at("vertex_pi").get<std::string>());
    doc.method = j.at("method").get<std::string>();
    const json& t = j.at("timings_us");
    doc.timings.parse_us = t.at("parse").get<std::int64_t>();
    doc.timings.trees_us = t.at("trees").get<std::int64_t>();
    doc.timings.indices_us = t.at("indices").get<std::int64_t>();
    doc.timings.total_us = t.at("total").get<std::int64_t>();
    return doc;
}

} // namespace hexcut::cli
