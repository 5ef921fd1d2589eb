#pragma once
// SVG rendering of the three candidate paths side by side. One path unit is
// one SVG user unit; the viewBox is fitted to the content.

#include <algorithm>
#include <cstdio>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "dubseq/instance.hpp"
#include "dubseq/sequence.hpp"

namespace dubseq {

namespace detail {

inline std::string fmt3(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

struct Box {
    double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
    double x1 = -std::numeric_limits<double>::infinity(), y1 = x1;

    void add(Point p) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    }
};

}  // namespace detail

[[nodiscard]] inline std::string render_svg(const Instance& inst, std::span<const CandidateSolution> candidates) {
    const double rho = inst.rho;
    const double margin = 2.0 * rho;
    std::vector<std::vector<Point>> polylines;
    detail::Box box;
    for (const auto& p : inst.points) box.add(p);
    for (const auto& c : candidates) {
        polylines.push_back(sample_path(c.path, rho / 8.0));
        for (const auto& p : polylines.back()) box.add(p);
    }
    const double panel_w = (box.x1 - box.x0) + 2.0 * margin;
    const double panel_h = (box.y1 - box.y0) + 2.0 * margin;
    const double width = panel_w * static_cast<double>(std::max<std::size_t>(candidates.size(), 1));
    using detail::fmt3;

    // SVG's y axis points down; flip so the picture matches the plane.
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fmt3(width) + " " +
                      fmt3(panel_h) + "\" width=\"" + fmt3(width) + "\" height=\"" + fmt3(panel_h) + "\">\n";
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const auto& c = candidates[k];
        const double ox = panel_w * static_cast<double>(k) + margin - box.x0;
        const double oy = margin + box.y1;
        auto X = [&](double x) { return fmt3(ox + x); };
        auto Y = [&](double y) { return fmt3(oy - y); };
        const std::string label = to_string(c.label);
        out += "  <g id=\"" + label + "\" class=\"candidate\">\n";
        out += "    <text x=\"" + fmt3(panel_w * static_cast<double>(k) + margin) + "\" y=\"" + fmt3(margin) +
               "\" font-size=\"" + fmt3(rho) + "\">" + label + " cost=" + fmt3(c.cost) + "</text>\n";
        out += "    <polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"" + fmt3(rho / 20.0) + "\" points=\"";
        for (std::size_t i = 0; i < polylines[k].size(); ++i) {
            if (i) out += ' ';
            out += X(polylines[k][i].x) + "," + Y(polylines[k][i].y);
        }
        out += "\"/>\n";
        for (std::size_t i = 0; i < inst.points.size(); ++i) {
            const auto& p = inst.points[i];
            out += "    <circle cx=\"" + X(p.x) + "\" cy=\"" + Y(p.y) + "\" r=\"" + fmt3(rho / 5.0) +
                   "\" fill=\"#c0392b\"/>\n";
            out += "    <text x=\"" + X(p.x + rho / 4.0) + "\" y=\"" + Y(p.y + rho / 4.0) + "\" font-size=\"" +
                   fmt3(rho / 2.0) + "\">" + std::to_string(i + 1) + "</text>\n";
        }
        out += "  </g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace dubseq
