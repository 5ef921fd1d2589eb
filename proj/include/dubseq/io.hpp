#pragma once
// JSON documents for instances and solutions.
//
//   instance: {"rho": number, "points": [[x, y], ...], "seed": integer | null}
//   solution: {"cost", "chosen", "candidates", "lb", "headings", "segments", ...}

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dubseq/instance.hpp"
#include "dubseq/sequence.hpp"

namespace dubseq {

namespace detail {

inline std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline double number_field(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError(where + ": expected a number");
    return j.get<double>();
}

}  // namespace detail

[[nodiscard]] inline Instance read_instance(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(detail::line_column(text, e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError("document: expected a JSON object");
    if (!doc.contains("rho")) throw ParseError("rho: missing field");
    if (!doc.contains("points")) throw ParseError("points: missing field");

    Instance inst;
    inst.rho = detail::number_field(doc["rho"], "rho");
    const auto& pts = doc["points"];
    if (!pts.is_array()) throw ParseError("points: expected an array");
    if (pts.empty()) throw ParseError("points: empty point list");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string where = "points[" + std::to_string(i) + "]";
        if (!pts[i].is_array() || pts[i].size() != 2) throw ParseError(where + ": expected [x, y]");
        inst.points.push_back({detail::number_field(pts[i][0], where + "[0]"),
                               detail::number_field(pts[i][1], where + "[1]")});
    }
    if (doc.contains("seed") && !doc["seed"].is_null()) {
        if (!doc["seed"].is_number_unsigned()) throw ParseError("seed: expected a non-negative integer or null");
        inst.seed = doc["seed"].get<std::uint64_t>();
    }
    validate(inst);
    return inst;
}

[[nodiscard]] inline std::string write_instance(const Instance& inst) {
    nlohmann::json doc;
    doc["rho"] = inst.rho;
    doc["points"] = nlohmann::json::array();
    for (const auto& p : inst.points) doc["points"].push_back({p.x, p.y});
    doc["seed"] = inst.seed ? nlohmann::json(*inst.seed) : nlohmann::json(nullptr);
    return doc.dump(2) + "\n";
}

[[nodiscard]] inline nlohmann::json segments_json(const DubinsPath& p) {
    auto out = nlohmann::json::array();
    for (const auto& s : p.segments()) out.push_back({{"kind", std::string(1, to_char(s.kind))}, {"extent", s.extent}});
    return out;
}

[[nodiscard]] inline nlohmann::json bounds_json(const BoundReport& b) {
    return {{"euclidean", b.euclidean_lb},
            {"grid_proxy", b.grid_proxy_lb},
            {"grid_upper_witness", b.grid_upper_witness},
            {"intervals", b.intervals},
            {"guaranteed", {{"euclidean", b.euclidean_guaranteed}, {"grid_proxy", b.grid_proxy_guaranteed}}}};
}

[[nodiscard]] inline nlohmann::json solution_json(const SolutionReport& r) {
    const auto& c = r.chosen();
    nlohmann::json doc;
    doc["cost"] = c.cost;
    doc["chosen"] = to_string(c.label);
    doc["candidates"] = nlohmann::json::object();
    for (const auto& cand : r.solution.candidates) doc["candidates"][to_string(cand.label)] = cand.cost;
    doc["lb"] = bounds_json(r.bounds);
    doc["ratio"] = {{"grid_proxy", r.a_posteriori_ratio}, {"euclidean", r.euclidean_ratio}};
    doc["guarantee_applies"] = r.guarantee_applies;
    doc["eps"] = r.eps;
    doc["rho"] = c.path.rho();
    doc["start"] = {c.path.start().x, c.path.start().y, c.path.start().heading};
    doc["headings"] = c.headings;
    doc["stations"] = c.stations;
    doc["segments"] = segments_json(c.path);
    return doc;
}

[[nodiscard]] inline std::string write_solution(const SolutionReport& r) { return solution_json(r).dump(2) + "\n"; }

}  // namespace dubseq
