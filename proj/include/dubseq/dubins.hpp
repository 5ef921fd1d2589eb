#pragma once
// Two-point Dubins paths (both headings fixed), one-sided CS / SC paths
// (one heading free), and the path value type used across the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dubseq/geometry.hpp"

namespace dubseq {

enum class SegmentKind : std::uint8_t { Left, Right, Straight };

[[nodiscard]] constexpr char to_char(SegmentKind k) noexcept {
    switch (k) {
        case SegmentKind::Left: return 'L';
        case SegmentKind::Right: return 'R';
        case SegmentKind::Straight: return 'S';
    }
    return '?';
}

[[nodiscard]] constexpr SegmentKind mirrored(SegmentKind k) noexcept {
    if (k == SegmentKind::Left) return SegmentKind::Right;
    if (k == SegmentKind::Right) return SegmentKind::Left;
    return k;
}

/// One primitive piece of a path. `extent` is the turn angle in radians for
/// arcs and the length for straight segments.
struct Segment {
    SegmentKind kind = SegmentKind::Straight;
    double extent = 0.0;

    [[nodiscard]] bool is_arc() const noexcept { return kind != SegmentKind::Straight; }
    [[nodiscard]] double length(double rho) const noexcept { return is_arc() ? rho * extent : extent; }
};

/// Configuration reached after travelling `s` (≤ segment length) along `seg`.
[[nodiscard]] inline Configuration advance(const Configuration& c, const Segment& seg, double rho, double s) {
    const double h = c.heading;
    switch (seg.kind) {
        case SegmentKind::Straight:
            return {c.x + s * std::cos(h), c.y + s * std::sin(h), h};
        case SegmentKind::Left: {
            const double phi = s / rho;
            return {c.x + rho * (std::sin(h + phi) - std::sin(h)), c.y - rho * (std::cos(h + phi) - std::cos(h)),
                    h + phi};
        }
        case SegmentKind::Right: {
            const double phi = s / rho;
            return {c.x - rho * (std::sin(h - phi) - std::sin(h)), c.y + rho * (std::cos(h - phi) - std::cos(h)),
                    h - phi};
        }
    }
    return c;
}

/// A forward-only path made of ρ-arcs and straight lines.
class DubinsPath {
public:
    DubinsPath(Configuration start, double rho, std::vector<Segment> segments = {})
        : start_(start), rho_(rho), segments_(std::move(segments)) {
        if (!(rho > 0.0) || !std::isfinite(rho)) throw std::invalid_argument("DubinsPath: rho must be positive");
        for (const auto& s : segments_) {
            if (!(s.extent >= 0.0) || !std::isfinite(s.extent))
                throw std::invalid_argument("DubinsPath: negative or non-finite segment extent");
            if (s.is_arc() && s.extent > kTwoPi + kAngleTolerance)
                throw std::invalid_argument("DubinsPath: arc extent exceeds 2*pi");
        }
    }

    [[nodiscard]] const Configuration& start() const noexcept { return start_; }
    [[nodiscard]] double rho() const noexcept { return rho_; }
    [[nodiscard]] std::span<const Segment> segments() const noexcept { return segments_; }

    [[nodiscard]] double length() const noexcept {
        double total = 0.0;
        for (const auto& s : segments_) total += s.length(rho_);
        return total;
    }

    /// Segment-type signature, e.g. "LSR", "SRS" or "" for an empty path.
    [[nodiscard]] std::string word() const {
        std::string w;
        for (const auto& s : segments_) w += to_char(s.kind);
        return w;
    }

    [[nodiscard]] Configuration state_at(double s) const {
        Configuration c = start_;
        for (const auto& seg : segments_) {
            const double len = seg.length(rho_);
            if (s <= len) return advance(c, seg, rho_, std::max(s, 0.0));
            c = advance(c, seg, rho_, len);
            s -= len;
        }
        return c;
    }

    [[nodiscard]] Configuration end() const {
        Configuration c = start_;
        for (const auto& seg : segments_) c = advance(c, seg, rho_, seg.length(rho_));
        return c;
    }

private:
    Configuration start_;
    double rho_;
    std::vector<Segment> segments_;
};

// ── two-point paths ─────────────────────────────────────────────────────

/// The six Dubins word families, in lexicographic order.
enum class DubinsWord : std::uint8_t { LRL, LSL, LSR, RLR, RSL, RSR };

inline constexpr std::array<DubinsWord, 6> kDubinsWords = {DubinsWord::LRL, DubinsWord::LSL, DubinsWord::LSR,
                                                           DubinsWord::RLR, DubinsWord::RSL, DubinsWord::RSR};

[[nodiscard]] constexpr std::array<SegmentKind, 3> word_kinds(DubinsWord w) noexcept {
    using enum SegmentKind;
    switch (w) {
        case DubinsWord::LRL: return {Left, Right, Left};
        case DubinsWord::LSL: return {Left, Straight, Left};
        case DubinsWord::LSR: return {Left, Straight, Right};
        case DubinsWord::RLR: return {Right, Left, Right};
        case DubinsWord::RSL: return {Right, Straight, Left};
        case DubinsWord::RSR: return {Right, Straight, Right};
    }
    return {Straight, Straight, Straight};
}

[[nodiscard]] inline std::string to_string(DubinsWord w) {
    const auto k = word_kinds(w);
    return {to_char(k[0]), to_char(k[1]), to_char(k[2])};
}

/// Segment parameters of one word family in units of ρ (arcs in radians,
/// the middle straight in multiples of ρ).
using WordParams = std::array<double, 3>;

namespace detail {

struct NormalizedPair {
    double d, alpha, beta, sa, ca, sb, cb, cab;
};

inline NormalizedPair normalize_pair(const Configuration& a, const Configuration& b, double rho) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double phi = std::atan2(dy, dx);
    NormalizedPair n{};
    n.d = std::hypot(dx, dy) / rho;
    n.alpha = normalize_angle(a.heading - phi);
    n.beta = normalize_angle(b.heading - phi);
    n.sa = std::sin(n.alpha);
    n.ca = std::cos(n.alpha);
    n.sb = std::sin(n.beta);
    n.cb = std::cos(n.beta);
    n.cab = std::cos(n.alpha - n.beta);
    return n;
}

inline std::optional<WordParams> solve_word(DubinsWord w, const NormalizedPair& n) {
    const double d = n.d, a = n.alpha, b = n.beta;
    const double sa = n.sa, ca = n.ca, sb = n.sb, cb = n.cb;
    switch (w) {
        case DubinsWord::LSL: {
            const double p2 = 2.0 + d * d - 2.0 * n.cab + 2.0 * d * (sa - sb);
            if (p2 < 0.0) return std::nullopt;
            const double th = std::atan2(cb - ca, d + sa - sb);
            return WordParams{wrap_turn(th - a), std::sqrt(p2), wrap_turn(b - th)};
        }
        case DubinsWord::RSR: {
            const double p2 = 2.0 + d * d - 2.0 * n.cab + 2.0 * d * (sb - sa);
            if (p2 < 0.0) return std::nullopt;
            const double th = std::atan2(ca - cb, d - sa + sb);
            return WordParams{wrap_turn(a - th), std::sqrt(p2), wrap_turn(th - b)};
        }
        case DubinsWord::LSR: {
            const double p2 = -2.0 + d * d + 2.0 * n.cab + 2.0 * d * (sa + sb);
            if (p2 < 0.0) return std::nullopt;
            const double p = std::sqrt(p2);
            const double th = std::atan2(-ca - cb, d + sa + sb) - std::atan2(-2.0, p);
            return WordParams{wrap_turn(th - a), p, wrap_turn(th - b)};
        }
        case DubinsWord::RSL: {
            const double p2 = d * d - 2.0 + 2.0 * n.cab - 2.0 * d * (sa + sb);
            if (p2 < 0.0) return std::nullopt;
            const double p = std::sqrt(p2);
            const double th = std::atan2(ca + cb, d - sa - sb) - std::atan2(2.0, p);
            return WordParams{wrap_turn(a - th), p, wrap_turn(b - th)};
        }
        case DubinsWord::RLR: {
            const double c = (6.0 - d * d + 2.0 * n.cab + 2.0 * d * (sa - sb)) / 8.0;
            if (std::abs(c) > 1.0) return std::nullopt;
            const double th = std::atan2(ca - cb, d - sa + sb);
            // Middle arc longer than π: the only CCC branch that can be shortest.
            const double p = normalize_angle(kTwoPi - std::acos(c));
            const double t = wrap_turn(a - th + p / 2.0);
            return WordParams{t, p, wrap_turn(a - b - t + p)};
        }
        case DubinsWord::LRL: {
            const double c = (6.0 - d * d + 2.0 * n.cab + 2.0 * d * (sb - sa)) / 8.0;
            if (std::abs(c) > 1.0) return std::nullopt;
            const double th = std::atan2(ca - cb, d + sa - sb);
            const double p = normalize_angle(kTwoPi - std::acos(c));
            const double t = wrap_turn(-a - th + p / 2.0);
            return WordParams{t, p, wrap_turn(b - a - t + p)};
        }
    }
    return std::nullopt;
}

inline int nonzero_count(const WordParams& p) {
    return static_cast<int>(std::count_if(p.begin(), p.end(), [](double v) { return v > kAngleTolerance; }));
}

struct BestWord {
    DubinsWord word;
    WordParams params;
    double length;  // in units of ρ
};

// Minimum over the six families; ties (within 1e-10 ρ) prefer fewer nonzero
// segments, then the lexicographically smaller word.
inline BestWord best_word(const Configuration& a, const Configuration& b, double rho) {
    const NormalizedPair n = normalize_pair(a, b, rho);
    std::optional<BestWord> best;
    for (DubinsWord w : kDubinsWords) {
        const auto p = solve_word(w, n);
        if (!p) continue;
        const double len = (*p)[0] + (*p)[1] + (*p)[2];
        if (!best) {
            best = BestWord{w, *p, len};
            continue;
        }
        const double tie = 1e-10 * std::max(1.0, best->length);
        if (len < best->length - tie ||
            (std::abs(len - best->length) <= tie && nonzero_count(*p) < nonzero_count(best->params))) {
            best = BestWord{w, *p, len};
        }
    }
    // LSL and RSR are always feasible: their p² is a squared centre distance.
    if (!best) throw std::logic_error("dubins: no feasible word family");
    return *best;
}

}  // namespace detail

/// Segment parameters of one word family from a to b, if that family is
/// feasible. Exposed for tests and diagnostics.
[[nodiscard]] inline std::optional<WordParams> dubins_word(const Configuration& a, const Configuration& b, double rho,
                                                           DubinsWord w) {
    return detail::solve_word(w, detail::normalize_pair(a, b, rho));
}

/// Shortest path length between two configurations, without building the path.
[[nodiscard]] inline double dubins_length(const Configuration& a, const Configuration& b, double rho) {
    return detail::best_word(a, b, rho).length * rho;
}

[[nodiscard]] inline DubinsPath dubins_shortest(const Configuration& a, const Configuration& b, double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("dubins_shortest: rho must be positive");
    const auto best = detail::best_word(a, b, rho);
    const auto kinds = word_kinds(best.word);
    std::vector<Segment> segs;
    for (std::size_t i = 0; i < 3; ++i) {
        if (best.params[i] <= kAngleTolerance) continue;
        segs.push_back({kinds[i], kinds[i] == SegmentKind::Straight ? best.params[i] * rho : best.params[i]});
    }
    return DubinsPath(a, rho, std::move(segs));
}

// ── one-sided paths ─────────────────────────────────────────────────────

enum class TurnSide : std::uint8_t { Left, Right };

[[nodiscard]] constexpr TurnSide opposite(TurnSide s) noexcept {
    return s == TurnSide::Left ? TurnSide::Right : TurnSide::Left;
}

[[nodiscard]] constexpr SegmentKind to_kind(TurnSide s) noexcept {
    return s == TurnSide::Left ? SegmentKind::Left : SegmentKind::Right;
}

/// Arc-then-straight construction from a configuration to a free-heading
/// target. `turn` is the raw arc extent in [0, 2π) (not collapsed near 2π).
struct OneSidedGeometry {
    double turn = 0.0;
    double straight = 0.0;
    double exit_heading = 0.0;

    [[nodiscard]] double length(double rho) const noexcept { return rho * turn + straight; }
};

/// Tangent construction on the turning circle of `side`. Throws
/// InfeasibleHeading if the target lies strictly inside that circle.
[[nodiscard]] inline OneSidedGeometry one_sided_geometry(const Configuration& a, Point target, double rho,
                                                         TurnSide side) {
    const double h = a.heading;
    const double sign = side == TurnSide::Left ? 1.0 : -1.0;
    const Point center{a.x - sign * rho * std::sin(h), a.y + sign * rho * std::cos(h)};
    const Point rel = target - center;
    const double dist = norm(rel);
    if (dist < rho * (1.0 - 1e-12)) throw InfeasibleHeading("one-sided path: target inside the turning circle");
    const double straight = std::sqrt(std::max(0.0, dist * dist - rho * rho));
    const double gamma = std::atan2(rho, straight);
    const double dir = std::atan2(rel.y, rel.x);
    OneSidedGeometry g;
    g.exit_heading = normalize_angle(dir + sign * gamma);
    g.turn = normalize_angle(sign * (g.exit_heading - h));
    g.straight = straight;
    return g;
}

namespace detail {

inline std::vector<Segment> cs_segments(const OneSidedGeometry& g, TurnSide side, double rho) {
    std::vector<Segment> segs;
    const double turn = wrap_turn(g.turn);
    if (turn > kAngleTolerance) segs.push_back({to_kind(side), turn});
    if (g.straight > kAngleTolerance * rho) segs.push_back({SegmentKind::Straight, g.straight});
    return segs;
}

}  // namespace detail

/// Arc on the `side` turning circle of `a`, then a straight line to `target`.
[[nodiscard]] inline DubinsPath shortest_cs_side(const Configuration& a, Point target, double rho, TurnSide side) {
    return DubinsPath(a, rho, detail::cs_segments(one_sided_geometry(a, target, rho, side), side, rho));
}

/// Shortest arc-then-straight path from `a` to `target` with free final
/// heading. Requires the 2ρ separation regime.
[[nodiscard]] inline DubinsPath shortest_cs(const Configuration& a, Point target, double rho) {
    require_separation(a.position(), target, rho, "shortest_cs");
    const auto left = shortest_cs_side(a, target, rho, TurnSide::Left);
    const auto right = shortest_cs_side(a, target, rho, TurnSide::Right);
    return right.length() < left.length() ? right : left;
}

/// Time reversal: the same curve driven from its end back to its start.
/// Left arcs become right arcs and the segment order flips.
[[nodiscard]] inline DubinsPath reversed(const DubinsPath& p) {
    const Configuration e = p.end();
    std::vector<Segment> segs(p.segments().rbegin(), p.segments().rend());
    for (auto& s : segs) s.kind = mirrored(s.kind);
    return DubinsPath(Configuration(e.x, e.y, e.heading + kPi), p.rho(), std::move(segs));
}

/// Straight line from `source`, then an arc on the `side` circle arriving at `b`.
[[nodiscard]] inline DubinsPath shortest_sc_side(Point source, const Configuration& b, double rho, TurnSide side) {
    // Built as the reversal of a CS path from b driven backwards.
    const Configuration back(b.x, b.y, b.heading + kPi);
    const auto g = one_sided_geometry(back, source, rho, opposite(side));
    std::vector<Segment> segs = detail::cs_segments(g, opposite(side), rho);
    std::reverse(segs.begin(), segs.end());
    for (auto& s : segs) s.kind = mirrored(s.kind);
    return DubinsPath(Configuration(source, g.exit_heading + kPi), rho, std::move(segs));
}

/// Shortest straight-then-arc path from `source` (free initial heading) to `b`.
[[nodiscard]] inline DubinsPath shortest_sc(Point source, const Configuration& b, double rho) {
    require_separation(source, b.position(), rho, "shortest_sc");
    const auto left = shortest_sc_side(source, b, rho, TurnSide::Left);
    const auto right = shortest_sc_side(source, b, rho, TurnSide::Right);
    return right.length() < left.length() ? right : left;
}

// ── path utilities ──────────────────────────────────────────────────────

/// Polyline through `p` whose consecutive points are at most `step` apart
/// in arc length; both endpoints included.
[[nodiscard]] inline std::vector<Point> sample_path(const DubinsPath& p, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("sample_path: step must be positive");
    std::vector<Point> out{p.start().position()};
    Configuration c = p.start();
    for (const auto& seg : p.segments()) {
        const double len = seg.length(p.rho());
        const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil(len / step - 1e-12)));
        for (std::size_t i = 1; i <= pieces; ++i)
            out.push_back(advance(c, seg, p.rho(), len * static_cast<double>(i) / static_cast<double>(pieces))
                              .position());
        c = advance(c, seg, p.rho(), len);
    }
    if (p.segments().empty()) out.push_back(p.start().position());
    return out;
}

/// Joins consecutive paths into one. Zero-extent segments are dropped and
/// adjacent segments of the same kind merged.
[[nodiscard]] inline DubinsPath concatenate(std::span<const DubinsPath> paths) {
    if (paths.empty()) throw std::invalid_argument("concatenate: no paths");
    const double rho = paths.front().rho();
    std::vector<Segment> segs;
    auto push = [&](Segment s) {
        if (s.extent == 0.0) return;
        if (!segs.empty() && segs.back().kind == s.kind &&
            (s.kind == SegmentKind::Straight || segs.back().extent + s.extent <= kTwoPi)) {
            segs.back().extent += s.extent;
            return;
        }
        segs.push_back(s);
    };
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (paths[i].rho() != rho) throw std::invalid_argument("concatenate: mismatched turning radii");
        if (i > 0) {
            const Configuration e = paths[i - 1].end();
            const Configuration& s = paths[i].start();
            const double gap = distance(e.position(), s.position());
            const double turn = std::abs(angle_diff(e.heading, s.heading));
            if (gap > 1e-6 * rho || turn > 1e-6)
                throw DiscontinuityError("concatenate: path " + std::to_string(i - 1) + " ends " +
                                         std::to_string(gap) + " away / " + std::to_string(turn) +
                                         " rad off the start of path " + std::to_string(i));
        }
        for (const auto& s : paths[i].segments()) push(s);
    }
    return DubinsPath(paths.front().start(), rho, std::move(segs));
}

/// Walks `p` and returns, for each waypoint in order, the arc length at
/// which the path passes within `tol` of it. Returns nullopt if some
/// waypoint is missed or visited out of order.
[[nodiscard]] inline std::optional<std::vector<double>> locate_waypoints(const DubinsPath& p,
                                                                         std::span<const Point> waypoints,
                                                                         double tol) {
    const double rho = p.rho();
    const auto segs = p.segments();
    std::vector<double> stations;
    std::size_t k = 0;
    double offset = 0.0;   // arc length at the start of segment k
    double s_min = 0.0;    // earliest admissible parameter within segment k
    Configuration c = p.start();

    auto closest_on = [&](const Segment& seg, const Configuration& from, Point q, double lo) {
        const double len = seg.length(rho);
        double s = lo;
        if (seg.kind == SegmentKind::Straight) {
            s = std::clamp(dot(q - from.position(), unit(from.heading)), lo, len);
        } else {
            const double sign = seg.kind == SegmentKind::Left ? 1.0 : -1.0;
            const Point center{from.x - sign * rho * std::sin(from.heading),
                               from.y + sign * rho * std::cos(from.heading)};
            const double a0 = std::atan2(from.y - center.y, from.x - center.x);
            const double aq = std::atan2(q.y - center.y, q.x - center.x);
            double phi = normalize_angle(sign * (aq - a0));
            if (phi > seg.extent) phi = (kTwoPi - phi < phi - seg.extent) ? 0.0 : seg.extent;
            s = std::clamp(rho * phi, lo, len);
        }
        return std::pair{s, distance(advance(from, seg, rho, s).position(), q)};
    };

    for (const Point& q : waypoints) {
        bool found = false;
        while (!found) {
            if (k >= segs.size()) {
                // Past the last segment only the end point remains.
                if (distance(c.position(), q) <= tol) {
                    stations.push_back(offset);
                    found = true;
                    break;
                }
                return std::nullopt;
            }
            const auto [s, dist] = closest_on(segs[k], c, q, s_min);
            if (dist <= tol) {
                stations.push_back(offset + s);
                s_min = s;
                found = true;
            } else {
                const double len = segs[k].length(rho);
                c = advance(c, segs[k], rho, len);
                offset += len;
                s_min = 0.0;
                ++k;
            }
        }
    }
    return stations;
}

}  // namespace dubseq
