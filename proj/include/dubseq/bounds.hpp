#pragma once
// Reference values for judging a solution: the Euclidean lower bound, and a
// layered-graph dynamic program over discretized headings.
//
// The DP has one layer per waypoint and one node per grid heading; an edge
// costs the Dubins distance between the two fixed-heading configurations.
//   Upper mode  - nodes are exact grid headings, so the result is the length
//                 of a feasible path (an upper bound on the optimum).
//   Proxy mode  - each edge costs the minimum over a 4x finer sub-grid of the
//                 two heading intervals. This imitates an interval lower
//                 bound but is NOT a guaranteed bound; it is flagged so.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dubseq/dubins.hpp"
#include "dubseq/instance.hpp"

namespace dubseq {

struct HeadingGrid {
    std::size_t intervals = 32;

    [[nodiscard]] double width() const noexcept { return kTwoPi / static_cast<double>(intervals); }
    /// Representative (left end) heading of interval j.
    [[nodiscard]] double heading(std::size_t j) const noexcept { return width() * static_cast<double>(j); }
};

enum class GridMode : std::uint8_t { ProxyLowerBound, Upper };

inline constexpr std::size_t kProxySubdivision = 4;

struct GridDpResult {
    double cost = 0.0;
    std::vector<std::size_t> intervals;  // chosen heading interval per waypoint
};

[[nodiscard]] inline double euclidean_lb(const Instance& inst) { return euclidean_length(inst); }

namespace detail {

struct Leg {
    Point from, to;
    double rho;

    [[nodiscard]] double length(double ha, double hb) const {
        return dubins_length(Configuration(from, ha), Configuration(to, hb), rho);
    }
};

inline std::vector<double> edge_table(const Leg& leg, const HeadingGrid& grid, GridMode mode) {
    const std::size_t m = grid.intervals;
    std::vector<double> w(m * m);
    if (mode == GridMode::Upper) {
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) w[j * m + k] = leg.length(grid.heading(j), grid.heading(k));
        return w;
    }
    const std::size_t f = kProxySubdivision;
    const double sub = grid.width() / static_cast<double>(f);
    std::fill(w.begin(), w.end(), std::numeric_limits<double>::infinity());
    for (std::size_t a = 0; a < m * f; ++a) {
        for (std::size_t b = 0; b < m * f; ++b) {
            const double len = leg.length(sub * static_cast<double>(a), sub * static_cast<double>(b));
            double& cell = w[(a / f) * m + (b / f)];
            if (len < cell) cell = len;
        }
    }
    return w;
}

}  // namespace detail

[[nodiscard]] inline GridDpResult heading_grid_dp(const Instance& inst, const HeadingGrid& grid, GridMode mode) {
    validate(inst);
    if (grid.intervals < 2) throw std::invalid_argument("heading_grid_dp: need at least 2 intervals");
    const std::size_t m = grid.intervals;
    const std::size_t n = inst.size();
    std::vector<double> cost(m, 0.0), next(m);
    std::vector<std::vector<std::size_t>> back(n, std::vector<std::size_t>(m, 0));

    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto w = detail::edge_table({inst.points[i], inst.points[i + 1], inst.rho}, grid, mode);
        for (std::size_t k = 0; k < m; ++k) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t arg = 0;
            for (std::size_t j = 0; j < m; ++j) {
                const double c = cost[j] + w[j * m + k];
                if (c < best) {
                    best = c;
                    arg = j;
                }
            }
            next[k] = best;
            back[i + 1][k] = arg;
        }
        cost.swap(next);
    }

    GridDpResult r;
    std::size_t arg = 0;
    for (std::size_t k = 1; k < m; ++k)
        if (cost[k] < cost[arg]) arg = k;
    r.cost = cost[arg];
    r.intervals.assign(n, 0);
    r.intervals[n - 1] = arg;
    for (std::size_t i = n - 1; i > 0; --i) r.intervals[i - 1] = back[i][r.intervals[i]];
    return r;
}

/// Feasible path realizing an Upper-mode DP result.
[[nodiscard]] inline DubinsPath grid_witness_path(const Instance& inst, const HeadingGrid& grid,
                                                  const GridDpResult& r) {
    std::vector<DubinsPath> legs;
    for (std::size_t i = 0; i + 1 < inst.size(); ++i)
        legs.push_back(dubins_shortest(Configuration(inst.points[i], grid.heading(r.intervals[i])),
                                       Configuration(inst.points[i + 1], grid.heading(r.intervals[i + 1])),
                                       inst.rho));
    return concatenate(legs);
}

struct BoundReport {
    double euclidean_lb = 0.0;
    double grid_proxy_lb = 0.0;
    double grid_upper_witness = 0.0;
    std::size_t intervals = 32;
    bool euclidean_guaranteed = true;
    bool grid_proxy_guaranteed = false;
};

[[nodiscard]] inline BoundReport compute_bounds(const Instance& inst, const HeadingGrid& grid = {}) {
    BoundReport b;
    b.euclidean_lb = euclidean_lb(inst);
    b.grid_proxy_lb = heading_grid_dp(inst, grid, GridMode::ProxyLowerBound).cost;
    b.grid_upper_witness = heading_grid_dp(inst, grid, GridMode::Upper).cost;
    b.intervals = grid.intervals;
    return b;
}

}  // namespace dubseq
