#pragma once
// Approximation for the ordered-waypoint problem.
//
// Three candidate paths are built. Candidate F(o), o ∈ {0,1,2}, solves
// disjoint three-point subproblems on the triples starting at index o, o+3,
// ...; leftover points before the first / after the last triple are covered
// by a straight line (two points) or get a free heading (one point). The
// blocks are joined by shortest fixed-heading Dubins connectors and the
// cheapest candidate is returned. For n divisible by 3 the result is within
// (1 + π/3 + ε) of the optimum.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dubseq/bounds.hpp"
#include "dubseq/dubins.hpp"
#include "dubseq/instance.hpp"
#include "dubseq/three_point.hpp"

namespace dubseq {

/// 1 + π/3, the approximation factor for n divisible by 3 (before ε).
inline constexpr double kApproximationFactor = 1.0 + kPi / 3.0;

enum class CandidateLabel : std::uint8_t { F1, F2, F3 };

[[nodiscard]] inline const char* to_string(CandidateLabel l) noexcept {
    switch (l) {
        case CandidateLabel::F1: return "F1";
        case CandidateLabel::F2: return "F2";
        case CandidateLabel::F3: return "F3";
    }
    return "?";
}

using IndexPair = std::pair<std::size_t, std::size_t>;

/// How candidate F(offset+1) covers the waypoints (0-based indices).
struct Partition {
    int offset = 0;
    std::vector<std::array<std::size_t, 3>> triples;
    std::vector<IndexPair> connectors;
    std::vector<IndexPair> loose_segments;
    std::vector<std::size_t> free_heading_points;
};

namespace detail {

enum class BlockKind : std::uint8_t { Triple, Line, Single };

struct Block {
    BlockKind kind;
    std::size_t first;  // index of the first waypoint in the block

    [[nodiscard]] std::size_t last() const noexcept {
        return first + (kind == BlockKind::Triple ? 2 : kind == BlockKind::Line ? 1 : 0);
    }
};

// A leftover run of 1 or 2 points becomes a single free-heading point or a line.
inline void push_leftover(std::vector<Block>& blocks, std::size_t first, std::size_t count) {
    if (count == 1) blocks.push_back({BlockKind::Single, first});
    if (count == 2) blocks.push_back({BlockKind::Line, first});
}

inline std::vector<Block> blocks_for(std::size_t n, int offset) {
    std::vector<Block> blocks;
    const auto o = static_cast<std::size_t>(offset);
    push_leftover(blocks, 0, std::min(o, n));
    std::size_t i = o;
    for (; i + 2 < n; i += 3) blocks.push_back({BlockKind::Triple, i});
    push_leftover(blocks, i, n - std::min(i, n));
    return blocks;
}

}  // namespace detail

[[nodiscard]] inline Partition make_partition(std::size_t n, int offset) {
    if (n < 3) throw std::invalid_argument("make_partition: need at least 3 points");
    if (offset < 0 || offset > 2) throw std::invalid_argument("make_partition: offset must be 0, 1 or 2");
    Partition p;
    p.offset = offset;
    const auto blocks = detail::blocks_for(n, offset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& blk = blocks[b];
        switch (blk.kind) {
            case detail::BlockKind::Triple: p.triples.push_back({blk.first, blk.first + 1, blk.first + 2}); break;
            case detail::BlockKind::Line: p.loose_segments.emplace_back(blk.first, blk.first + 1); break;
            case detail::BlockKind::Single: p.free_heading_points.push_back(blk.first); break;
        }
        if (b + 1 < blocks.size()) p.connectors.emplace_back(blk.last(), blocks[b + 1].first);
    }
    return p;
}

enum class PieceKind : std::uint8_t { ThreePoint, Connector, Line };

[[nodiscard]] inline const char* to_string(PieceKind k) noexcept {
    switch (k) {
        case PieceKind::ThreePoint: return "three_point";
        case PieceKind::Connector: return "connector";
        case PieceKind::Line: return "line";
    }
    return "?";
}

struct LedgerEntry {
    PieceKind kind;
    std::size_t from;
    std::size_t to;
    double cost;
};

struct CandidateSolution {
    CandidateLabel label = CandidateLabel::F1;
    DubinsPath path;
    double cost = 0.0;  // sum of ledger costs, in ledger order
    std::vector<LedgerEntry> ledger{};
    std::vector<double> headings{};  // per waypoint
    std::vector<double> stations{};  // arc length at which each waypoint is passed
};

[[nodiscard]] inline CandidateSolution build_candidate(const Instance& inst, int offset, double eps) {
    validate(inst);
    if (!(eps > 0.0)) throw std::invalid_argument("build_candidate: eps must be positive");
    if (offset < 0 || offset > 2) throw std::invalid_argument("build_candidate: offset must be 0, 1 or 2");
    const auto& pts = inst.points;
    const std::size_t n = pts.size();
    const double rho = inst.rho;

    std::vector<DubinsPath> pieces;
    std::vector<LedgerEntry> ledger{};
    std::vector<double> headings(n, 0.0), stations(n, 0.0);
    std::optional<Configuration> tail;  // exit configuration of the previous block
    double s = 0.0;

    auto append = [&](DubinsPath path, PieceKind kind, std::size_t from, std::size_t to) {
        const double len = path.length();
        ledger.push_back({kind, from, to, len});
        pieces.push_back(std::move(path));
        s += len;
    };
    auto connect_to = [&](const Configuration& entry, std::size_t index) {
        if (tail) append(dubins_shortest(*tail, entry, rho), PieceKind::Connector, index - 1, index);
    };

    const auto blocks = detail::blocks_for(n, offset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& blk = blocks[b];
        const std::size_t i = blk.first;
        switch (blk.kind) {
            case detail::BlockKind::Triple: {
                auto tp = solve_three_point(pts[i], pts[i + 1], pts[i + 2], rho, eps);
                connect_to(tp.path.start(), i);
                for (std::size_t k = 0; k < 3; ++k) {
                    headings[i + k] = tp.headings[k];
                    stations[i + k] = s + tp.stations[k];
                }
                tail = tp.path.end();
                append(std::move(tp.path), PieceKind::ThreePoint, i, i + 2);
                break;
            }
            case detail::BlockKind::Line: {
                const double h = bearing(pts[i], pts[i + 1]);
                const Configuration start(pts[i], h);
                connect_to(start, i);
                headings[i] = headings[i + 1] = h;
                stations[i] = s;
                stations[i + 1] = s + distance(pts[i], pts[i + 1]);
                DubinsPath line(start, rho, {{SegmentKind::Straight, distance(pts[i], pts[i + 1])}});
                tail = line.end();
                append(std::move(line), PieceKind::Line, i, i + 1);
                break;
            }
            case detail::BlockKind::Single: {
                // Free heading: face the next waypoint, or continue from the previous one.
                const double h = (i == 0) ? bearing(pts[0], pts[1]) : bearing(pts[i - 1], pts[i]);
                const Configuration at(pts[i], h);
                connect_to(at, i);
                headings[i] = h;
                stations[i] = s;
                tail = at;
                break;
            }
        }
    }

    CandidateSolution c{.label = static_cast<CandidateLabel>(offset), .path = concatenate(pieces)};
    c.ledger = std::move(ledger);
    c.headings = std::move(headings);
    c.stations = std::move(stations);
    for (const auto& e : c.ledger) c.cost += e.cost;
    return c;
}

struct SequenceSolution {
    std::array<CandidateSolution, 3> candidates;
    std::size_t chosen_index = 0;

    [[nodiscard]] const CandidateSolution& chosen() const noexcept { return candidates[chosen_index]; }
};

/// Builds F1, F2, F3 and picks the cheapest (ties go to the lower label).
[[nodiscard]] inline SequenceSolution approximate_sequence(const Instance& inst, double eps) {
    SequenceSolution s{{build_candidate(inst, 0, eps), build_candidate(inst, 1, eps), build_candidate(inst, 2, eps)}};
    for (std::size_t k = 1; k < 3; ++k)
        if (s.candidates[k].cost < s.candidates[s.chosen_index].cost) s.chosen_index = k;
    return s;
}

struct SolutionReport {
    SequenceSolution solution;
    BoundReport bounds;
    double a_posteriori_ratio = 0.0;  // chosen cost / grid proxy lower bound
    double euclidean_ratio = 0.0;     // chosen cost / Euclidean lower bound (guaranteed)
    bool guarantee_applies = false;   // n divisible by 3
    double eps = 0.0;

    [[nodiscard]] const CandidateSolution& chosen() const noexcept { return solution.chosen(); }
    [[nodiscard]] std::array<double, 3> candidate_costs() const noexcept {
        return {solution.candidates[0].cost, solution.candidates[1].cost, solution.candidates[2].cost};
    }
};

[[nodiscard]] inline SolutionReport solve_sequence(const Instance& inst, double eps, const HeadingGrid& grid = {}) {
    SolutionReport r{approximate_sequence(inst, eps), compute_bounds(inst, grid)};
    const double cost = r.chosen().cost;
    r.a_posteriori_ratio = cost / r.bounds.grid_proxy_lb;
    r.euclidean_ratio = cost / r.bounds.euclidean_lb;
    r.guarantee_applies = inst.size() % 3 == 0;
    r.eps = eps;
    return r;
}

/// Split of a path's cost into the three leg classes used by the
/// approximation argument: legs p(3i)→p(3i+1), p(3i-2)→p(3i-1) and
/// p(3i-1)→p(3i) in 1-based numbering.
struct LegClassSums {
    double L1 = 0.0;
    double L2 = 0.0;
    double L3 = 0.0;

    [[nodiscard]] double total() const noexcept { return L1 + L2 + L3; }
};

/// `stations` are the arc lengths at which the reference path passes each
/// waypoint; see locate_waypoints().
[[nodiscard]] inline LegClassSums leg_class_sums(std::span<const double> stations) {
    LegClassSums s;
    for (std::size_t j = 0; j + 1 < stations.size(); ++j) {
        const double leg = stations[j + 1] - stations[j];
        switch (j % 3) {
            case 0: s.L2 += leg; break;
            case 1: s.L3 += leg; break;
            default: s.L1 += leg; break;
        }
    }
    return s;
}

/// Leg-class split of any path that visits the instance's waypoints in order.
[[nodiscard]] inline LegClassSums opt_partition_diagnostic(const Instance& inst, const DubinsPath& reference) {
    const auto stations = locate_waypoints(reference, inst.points, 1e-6 * inst.rho);
    if (!stations) throw std::invalid_argument("opt_partition_diagnostic: reference path misses a waypoint");
    return leg_class_sums(*stations);
}

}  // namespace dubseq
