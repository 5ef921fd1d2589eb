#pragma once
// Near-optimal path through three points with free headings.
//
// In a frame with p2 at the origin and p3 on the positive x-axis the
// shortest path is straight-arc-straight, turning right when p1 lies below
// the axis and left when above. The only unknown is the heading θ at p2.
// The total length D(θ) = D1(θ) + D2(θ) of the incoming SC path and the
// outgoing CS path has slope ±ρ(cos turn12 - cos turn23), which is monotone
// around the minimum, so the minimizer is found by bisection on the slope.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "dubseq/dubins.hpp"
#include "dubseq/geometry.hpp"

namespace dubseq {

/// Rigid motion putting p2 at the origin and p3 on the positive x-axis.
struct CanonicalFrame {
    Point origin;           // p2, world coordinates
    double rotation = 0.0;  // world bearing of p3 seen from p2
    double rho = 1.0;
    double d12 = 0.0;
    double d23 = 0.0;
    Point p1;               // canonical coordinates
    Point p3;               // canonical coordinates, (d23, 0)
    int y1_sign = 0;

    [[nodiscard]] Point to_canonical(Point w) const noexcept {
        const Point v = w - origin;
        const double c = std::cos(rotation), s = std::sin(rotation);
        return {c * v.x + s * v.y, -s * v.x + c * v.y};
    }
    [[nodiscard]] Point to_world(Point q) const noexcept {
        const double c = std::cos(rotation), s = std::sin(rotation);
        return Point{c * q.x - s * q.y, s * q.x + c * q.y} + origin;
    }
    [[nodiscard]] double heading_to_world(double h) const noexcept { return normalize_angle(h + rotation); }
    [[nodiscard]] double heading_to_canonical(double h) const noexcept { return normalize_angle(h - rotation); }
};

[[nodiscard]] inline CanonicalFrame canonicalize(Point p1, Point p2, Point p3, double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("canonicalize: rho must be positive");
    require_separation(p1, p2, rho, "three-point p1-p2");
    require_separation(p2, p3, rho, "three-point p2-p3");
    CanonicalFrame f;
    f.origin = p2;
    f.rotation = std::atan2(p3.y - p2.y, p3.x - p2.x);
    f.rho = rho;
    f.d12 = distance(p1, p2);
    f.d23 = distance(p2, p3);
    f.p1 = f.to_canonical(p1);
    f.p3 = {f.d23, 0.0};
    f.y1_sign = std::abs(f.p1.y) < 1e-9 * rho ? 0 : (f.p1.y < 0.0 ? -1 : 1);
    return f;
}

enum class ThreePointClass : std::uint8_t { SLS, SRS, Both, Straight };

[[nodiscard]] inline ThreePointClass classify(const CanonicalFrame& f) noexcept {
    if (f.y1_sign < 0) return ThreePointClass::SRS;
    if (f.y1_sign > 0) return ThreePointClass::SLS;
    return f.p1.x > 0.0 ? ThreePointClass::Both : ThreePointClass::Straight;
}

/// Lengths and turn angles of the two one-sided paths meeting at p2 with
/// heading θ (canonical frame), both turning to the same side.
struct ThreePointGeometry {
    double theta = 0.0;
    double D1 = 0.0;  // SC path p1 -> (p2, θ)
    double D2 = 0.0;  // CS path (p2, θ) -> p3
    double turn12 = 0.0;
    double turn23 = 0.0;
    double L12 = 0.0;
    double L23 = 0.0;

    [[nodiscard]] double total() const noexcept { return D1 + D2; }
    /// cos(turn12) - cos(turn23); zero at the optimum.
    [[nodiscard]] double g() const noexcept { return std::cos(turn12) - std::cos(turn23); }
    /// dD/dθ. Right turns: ρ(cos turn12 - cos turn23); left turns flip the sign.
    [[nodiscard]] double slope(double rho, TurnSide side) const noexcept {
        return (side == TurnSide::Right ? rho : -rho) * g();
    }
};

[[nodiscard]] inline ThreePointGeometry length_profile(const CanonicalFrame& f, double theta, TurnSide side) {
    const Configuration at_p2(0.0, 0.0, theta);
    const auto out = one_sided_geometry(at_p2, f.p3, f.rho, side);
    // The incoming SC path, driven backwards from p2, is a CS path turning the other way.
    const auto in = one_sided_geometry(Configuration(0.0, 0.0, theta + kPi), f.p1, f.rho, opposite(side));
    ThreePointGeometry g;
    g.theta = normalize_angle(theta);
    g.turn12 = in.turn;
    g.turn23 = out.turn;
    g.L12 = in.straight;
    g.L23 = out.straight;
    g.D1 = in.length(f.rho);
    g.D2 = out.length(f.rho);
    return g;
}

/// Search trace for one turn side. `bracket_lo/hi` delimit the slope sign
/// change that produced `theta` (equal when no bracket was used).
struct SideOptimum {
    TurnSide side = TurnSide::Right;
    ThreePointGeometry geometry;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
    double theta_tolerance = 0.0;
    bool bracketed = false;
};

namespace detail {

inline constexpr int kScanSamples = 256;
inline constexpr int kMaxBisections = 200;
// Resolution on θ needed for the equal-turn certificate to be meaningful.
inline constexpr double kThetaResolution = 1e-6;
// Samples stay this far from the jumps of D at θ = 0 and θ = β.
inline constexpr double kJumpClearance = 1e-7;

}  // namespace detail

/// Bisection θ-tolerance for a requested relative accuracy: a θ-interval of
/// this width changes D by at most eps·(d12 + d23) ≤ eps·D, since |dD/dθ| ≤ 2ρ.
[[nodiscard]] inline double theta_tolerance(const CanonicalFrame& f, double eps) noexcept {
    return std::min(detail::kThetaResolution, eps * (f.d12 + f.d23) / (2.0 * f.rho));
}

[[nodiscard]] inline SideOptimum optimize_side(const CanonicalFrame& f, TurnSide side, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("optimize_side: eps must be positive");
    const double rho = f.rho;
    const double tol = theta_tolerance(f, eps);
    auto eval = [&](double th) { return length_profile(f, th, side); };

    // D jumps by 2πρ where one of the straight legs passes exactly through
    // its far point: θ = 0 (towards p3) and θ = β (coming from p1).
    const double beta = normalize_angle(std::atan2(-f.p1.y, -f.p1.x));
    std::vector<std::pair<double, double>> pieces;
    if (beta > 4.0 * detail::kJumpClearance) pieces.emplace_back(0.0, beta);
    if (kTwoPi - beta > 4.0 * detail::kJumpClearance) pieces.emplace_back(beta, kTwoPi);

    SideOptimum best;
    best.side = side;
    best.theta_tolerance = tol;
    best.geometry.D1 = std::numeric_limits<double>::infinity();
    auto consider = [&](SideOptimum cand) {
        if (cand.geometry.total() < best.geometry.total()) best = cand;
    };

    ThreePointGeometry best_sample;
    best_sample.D1 = std::numeric_limits<double>::infinity();
    double sample_lo = 0.0, sample_hi = 0.0;
    bool any_bracket = false;

    for (const auto& [lo, hi] : pieces) {
        const double a = lo + detail::kJumpClearance;
        const double b = hi - detail::kJumpClearance;
        const int m = std::max(3, static_cast<int>(std::lround(detail::kScanSamples * (hi - lo) / kTwoPi)));
        std::vector<ThreePointGeometry> samples;
        samples.reserve(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) samples.push_back(eval(a + (b - a) * j / (m - 1)));

        for (int j = 0; j < m; ++j) {
            if (samples[j].total() < best_sample.total()) {
                best_sample = samples[j];
                sample_lo = samples[std::max(j - 1, 0)].theta;
                sample_hi = samples[std::min(j + 1, m - 1)].theta;
            }
        }

        for (int j = 0; j + 1 < m; ++j) {
            if (!(samples[j].slope(rho, side) < 0.0 && samples[j + 1].slope(rho, side) >= 0.0)) continue;
            any_bracket = true;
            SideOptimum cand;
            cand.side = side;
            cand.bracketed = true;
            cand.theta_tolerance = tol;
            cand.bracket_lo = samples[j].theta;
            cand.bracket_hi = samples[j + 1].theta;
            double l = cand.bracket_lo, h = cand.bracket_hi;
            ThreePointGeometry gl = samples[j], gh = samples[j + 1];
            while (h - l > tol && cand.iterations < detail::kMaxBisections) {
                const auto gm = eval(0.5 * (l + h));
                if (gm.slope(rho, side) < 0.0) {
                    l = gm.theta;
                    gl = gm;
                } else {
                    h = gm.theta;
                    gh = gm;
                }
                ++cand.iterations;
            }
            const auto gm = eval(0.5 * (l + h));
            cand.geometry = gm;
            if (gl.total() < cand.geometry.total()) cand.geometry = gl;
            if (gh.total() < cand.geometry.total()) cand.geometry = gh;
            consider(cand);
        }
    }

    // Golden-section refinement around the best sample: the only route when
    // no slope sign change was seen, and a cross-check otherwise.
    {
        SideOptimum cand;
        cand.side = side;
        cand.theta_tolerance = tol;
        cand.bracket_lo = cand.bracket_hi = best_sample.theta;
        constexpr double kInvPhi = 0.6180339887498949;
        double l = sample_lo, h = sample_hi;
        double x1 = h - kInvPhi * (h - l), x2 = l + kInvPhi * (h - l);
        auto g1 = eval(x1), g2 = eval(x2);
        while (h - l > tol && cand.iterations < detail::kMaxBisections) {
            if (g1.total() <= g2.total()) {
                h = x2;
                x2 = x1;
                g2 = g1;
                x1 = h - kInvPhi * (h - l);
                g1 = eval(x1);
            } else {
                l = x1;
                x1 = x2;
                g1 = g2;
                x2 = l + kInvPhi * (h - l);
                g2 = eval(x2);
            }
            ++cand.iterations;
        }
        cand.geometry = g1.total() <= g2.total() ? g1 : g2;
        if (best_sample.total() < cand.geometry.total()) cand.geometry = best_sample;
        // Rounding-level differences keep the bisection result and its trace.
        if (!any_bracket || cand.geometry.total() < best.geometry.total() * (1.0 - 1e-12)) best = cand;
    }
    return best;
}

enum class ThreePointWord : std::uint8_t { SLS, SRS, S };

[[nodiscard]] inline const char* to_string(ThreePointWord w) noexcept {
    switch (w) {
        case ThreePointWord::SLS: return "SLS";
        case ThreePointWord::SRS: return "SRS";
        case ThreePointWord::S: return "S";
    }
    return "?";
}

struct ThreePointSolution {
    DubinsPath path;
    std::array<double, 3> headings{};        // world headings at p1, p2, p3
    std::array<double, 3> stations{};        // arc length at which p1, p2, p3 are passed
    double turn12 = 0.0;
    double turn23 = 0.0;
    double certificate_residual = 0.0;       // |turn12 - turn23|
    ThreePointWord word = ThreePointWord::S;
    ThreePointClass classification = ThreePointClass::Straight;
    int iterations = 0;
    double theta_tolerance = 0.0;
    std::optional<SideOptimum> trace{};      // absent for straight-through instances

    [[nodiscard]] double length() const noexcept { return stations[2]; }
};

namespace detail {

inline ThreePointSolution straight_through(Point p1, Point p2, Point p3, double rho, ThreePointClass cls) {
    const double h = bearing(p1, p3);
    const double d12 = distance(p1, p2), d23 = distance(p2, p3);
    ThreePointSolution s{.path = DubinsPath(Configuration(p1, h), rho, {{SegmentKind::Straight, d12 + d23}})};
    s.headings = {h, h, h};
    s.stations = {0.0, d12, d12 + d23};
    s.classification = cls;
    return s;
}

inline ThreePointSolution realize(const CanonicalFrame& f, Point p1, Point p2, Point p3, const SideOptimum& opt,
                                  ThreePointClass cls) {
    const double theta = f.heading_to_world(opt.geometry.theta);
    const Configuration at_p2(p2, theta);
    const auto in = shortest_sc_side(p1, at_p2, f.rho, opt.side);
    const auto out = shortest_cs_side(at_p2, p3, f.rho, opt.side);
    const std::array<DubinsPath, 2> parts{in, out};
    ThreePointSolution s{.path = concatenate(parts)};
    s.headings = {in.start().heading, theta, out.end().heading};
    s.stations = {0.0, in.length(), in.length() + out.length()};
    s.turn12 = opt.geometry.turn12;
    s.turn23 = opt.geometry.turn23;
    s.certificate_residual = std::abs(opt.geometry.turn12 - opt.geometry.turn23);
    const bool turns = s.path.word().find_first_of("LR") != std::string::npos;
    s.word = !turns ? ThreePointWord::S : (opt.side == TurnSide::Left ? ThreePointWord::SLS : ThreePointWord::SRS);
    s.classification = cls;
    s.iterations = opt.iterations;
    s.theta_tolerance = opt.theta_tolerance;
    s.trace = opt;
    return s;
}

}  // namespace detail

/// Path through p1, p2, p3 (in order) no longer than (1 + eps) times the
/// shortest one. Adjacent points must be at least 2ρ apart.
[[nodiscard]] inline ThreePointSolution solve_three_point(Point p1, Point p2, Point p3, double rho, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("solve_three_point: eps must be positive");
    const CanonicalFrame f = canonicalize(p1, p2, p3, rho);
    const ThreePointClass cls = classify(f);
    switch (cls) {
        case ThreePointClass::Straight:
            return detail::straight_through(p1, p2, p3, rho, cls);
        case ThreePointClass::SRS:
            return detail::realize(f, p1, p2, p3, optimize_side(f, TurnSide::Right, eps), cls);
        case ThreePointClass::SLS:
            return detail::realize(f, p1, p2, p3, optimize_side(f, TurnSide::Left, eps), cls);
        case ThreePointClass::Both: {
            const auto left = optimize_side(f, TurnSide::Left, eps);
            const auto right = optimize_side(f, TurnSide::Right, eps);
            return detail::realize(f, p1, p2, p3, right.geometry.total() < left.geometry.total() ? right : left, cls);
        }
    }
    throw std::logic_error("solve_three_point: unreachable");
}

/// Same as solve_three_point() but with the turn side forced. Used to
/// check the side classification.
[[nodiscard]] inline ThreePointSolution solve_three_point_side(Point p1, Point p2, Point p3, double rho, double eps,
                                                               TurnSide side) {
    const CanonicalFrame f = canonicalize(p1, p2, p3, rho);
    return detail::realize(f, p1, p2, p3, optimize_side(f, side, eps), classify(f));
}

}  // namespace dubseq
