#pragma once
// Test-only reference computations. None of these call into the closed-form
// word solver or the three-point search they are used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "dubseq/dubins.hpp"
#include "dubseq/geometry.hpp"
#include "dubseq/instance.hpp"

namespace oracle {

using dubseq::Configuration;
using dubseq::kPi;
using dubseq::kTwoPi;
using dubseq::normalize_angle;
using dubseq::Point;

inline Point circle_center(const Configuration& c, double rho, double side /* +1 left, -1 right */) {
    return {c.x - side * rho * std::sin(c.heading), c.y + side * rho * std::cos(c.heading)};
}

inline double angle_of(Point v) { return std::atan2(v.y, v.x); }

// ── tangent-circle construction of all six words ───────────────────────

/// Lengths of every feasible CSC / CCC path from a to b, built from turning
/// circles and their common tangents. Both CCC branches are included.
inline std::vector<double> tangent_candidates(const Configuration& a, const Configuration& b, double rho) {
    std::vector<double> out;
    for (double s1 : {1.0, -1.0}) {
        for (double s2 : {1.0, -1.0}) {
            const Point c1 = circle_center(a, rho, s1);
            const Point c2 = circle_center(b, rho, s2);
            const Point v = c2 - c1;
            const double dist = dubseq::norm(v);
            // CSC
            double psi = 0.0, straight = 0.0;
            bool ok = true;
            if (s1 == s2) {
                psi = angle_of(v);
                straight = dist;
            } else if (dist >= 2.0 * rho) {
                straight = std::sqrt(dist * dist - 4.0 * rho * rho);
                const double gamma = std::atan2(2.0 * rho, straight);
                psi = angle_of(v) + (s1 > 0 ? gamma : -gamma);
            } else {
                ok = false;
            }
            if (ok) {
                const double t1 = normalize_angle(s1 * (psi - a.heading));
                const double t2 = normalize_angle(s2 * (b.heading - psi));
                out.push_back(rho * (t1 + t2) + straight);
            }
            // CCC: only same-side outer circles, middle circle turning the other way.
            if (s1 == s2 && dist <= 4.0 * rho && dist > 0.0) {
                const double half = dist / 2.0;
                const double h = std::sqrt(std::max(0.0, 4.0 * rho * rho - half * half));
                const Point mid = c1 + 0.5 * v;
                const Point perp{-v.y / dist, v.x / dist};
                for (double sg : {1.0, -1.0}) {
                    const Point c3 = mid + (sg * h) * perp;
                    const Point q1 = 0.5 * (c1 + c3);
                    const Point q2 = 0.5 * (c3 + c2);
                    const double hq1 = angle_of(q1 - c1) + s1 * kPi / 2.0;
                    const double hq2 = angle_of(q2 - c2) + s1 * kPi / 2.0;
                    const double t1 = normalize_angle(s1 * (hq1 - a.heading));
                    const double tm = normalize_angle(-s1 * (hq2 - hq1));
                    const double t3 = normalize_angle(s1 * (b.heading - hq2));
                    out.push_back(rho * (t1 + tm + t3));
                }
            }
        }
    }
    return out;
}

inline double tangent_shortest(const Configuration& a, const Configuration& b, double rho) {
    const auto c = tangent_candidates(a, b, rho);
    return *std::min_element(c.begin(), c.end());
}

// ── parametric sweep over the first arc ─────────────────────────────────

namespace detail {

inline Configuration after_arc(const Configuration& a, double rho, double side, double t) {
    const Point c = circle_center(a, rho, side);
    const double h = a.heading + side * t;
    return {c.x + side * rho * std::sin(h), c.y - side * rho * std::cos(h), h};
}

template <class Residual, class Length>
void sweep_roots(std::size_t samples, Residual f, Length len, double& best) {
    double t_prev = 0.0;
    double f_prev = f(0.0);
    for (std::size_t i = 1; i <= samples; ++i) {
        const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(samples);
        const double f_cur = f(t);
        if (f_prev == 0.0) {
            if (auto l = len(t_prev)) best = std::min(best, *l);
        } else if ((f_prev < 0.0) != (f_cur < 0.0)) {
            double lo = t_prev, hi = t, flo = f_prev;
            for (int k = 0; k < 60; ++k) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            if (auto l = len(0.5 * (lo + hi))) best = std::min(best, *l);
        }
        t_prev = t;
        f_prev = f_cur;
    }
}

}  // namespace detail

/// Brute-force shortest path: for every word family, sweep the first arc
/// extent t over [0, 2π) with `samples_per_word` samples, locate the t at
/// which the remaining two segments close the path exactly (sign change of a
/// tangency residual, refined by bisection), and keep the shortest closure.
inline double sweep_shortest(const Configuration& a, const Configuration& b, double rho,
                             std::size_t samples_per_word) {
    double best = std::numeric_limits<double>::infinity();
    for (double s1 : {1.0, -1.0}) {
        for (double s2 : {1.0, -1.0}) {
            const Point c2 = circle_center(b, rho, s2);
            // C S C: after the first arc the line along the heading must touch circle c2
            // with c2 on the correct side.
            auto f_csc = [&](double t) {
                const auto q = detail::after_arc(a, rho, s1, t);
                return dubseq::cross(dubseq::unit(q.heading), c2 - q.position()) - s2 * rho;
            };
            auto len_csc = [&](double t) -> std::optional<double> {
                const auto q = detail::after_arc(a, rho, s1, t);
                const double straight = dubseq::dot(dubseq::unit(q.heading), c2 - q.position());
                if (straight < -1e-9 * rho) return std::nullopt;
                const double t3 = normalize_angle(s2 * (b.heading - q.heading));
                return rho * (t + t3) + std::max(0.0, straight);
            };
            detail::sweep_roots(samples_per_word, f_csc, len_csc, best);

            if (s1 != s2) continue;
            // C C C: the middle circle (turning the other way) must touch circle c2.
            auto mid_center = [&](double t) {
                const auto q = detail::after_arc(a, rho, s1, t);
                return circle_center(q, rho, -s1);
            };
            auto f_ccc = [&](double t) { return dubseq::distance(mid_center(t), c2) - 2.0 * rho; };
            auto len_ccc = [&](double t) -> std::optional<double> {
                const auto q = detail::after_arc(a, rho, s1, t);
                const Point c3 = circle_center(q, rho, -s1);
                const Point tp = 0.5 * (c3 + c2);
                const double h_tp = angle_of(tp - c3) - s1 * kPi / 2.0;
                const double tm = normalize_angle(-s1 * (h_tp - q.heading));
                const double t3 = normalize_angle(s1 * (b.heading - h_tp));
                return rho * (t + tm + t3);
            };
            detail::sweep_roots(samples_per_word, f_ccc, len_ccc, best);
        }
    }
    return best;
}

// ── three-point grid oracle ─────────────────────────────────────────────

/// min over `n` uniform headings θ at p2 of
///   shortest SC(p1 -> (p2, θ)) + shortest CS((p2, θ) -> p3),
/// each one-sided path choosing its own best turn side.
inline double three_point_grid_min(Point p1, Point p2, Point p3, double rho, std::size_t n) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Configuration at(p2, kTwoPi * static_cast<double>(i) / static_cast<double>(n));
        const double len = dubseq::shortest_sc(p1, at, rho).length() + dubseq::shortest_cs(at, p3, rho).length();
        best = std::min(best, len);
    }
    return best;
}

// ── random inputs ───────────────────────────────────────────────────────

inline Point random_point_at_distance(std::mt19937_64& rng, Point from, double dmin, double dmax) {
    std::uniform_real_distribution<double> ang(0.0, kTwoPi), dist(dmin, dmax);
    const double a = ang(rng), d = dist(rng);
    return {from.x + d * std::cos(a), from.y + d * std::sin(a)};
}

/// Configuration pair whose positions are 2ρ to 10ρ apart, random headings.
inline std::pair<Configuration, Configuration> random_pair(std::mt19937_64& rng, double rho) {
    std::uniform_real_distribution<double> coord(-10.0 * rho, 10.0 * rho), ang(0.0, kTwoPi);
    const Point p{coord(rng), coord(rng)};
    const Point q = random_point_at_distance(rng, p, 2.0 * rho, 10.0 * rho);
    return {Configuration(p, ang(rng)), Configuration(q, ang(rng))};
}

/// Three points with adjacent gaps in [2ρ, 8ρ].
inline std::array<Point, 3> random_triple(std::mt19937_64& rng, double rho) {
    std::uniform_real_distribution<double> coord(-10.0 * rho, 10.0 * rho);
    const Point p1{coord(rng), coord(rng)};
    const Point p2 = random_point_at_distance(rng, p1, 2.0 * rho, 8.0 * rho);
    const Point p3 = random_point_at_distance(rng, p2, 2.0 * rho, 8.0 * rho);
    return {p1, p2, p3};
}

/// Rigid motion: rotate by `angle` about the origin, then translate.
struct RigidMotion {
    double angle;
    Point shift;

    [[nodiscard]] Point operator()(Point p) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return Point{c * p.x - s * p.y, s * p.x + c * p.y} + shift;
    }
    [[nodiscard]] Configuration operator()(const Configuration& q) const {
        return {(*this)(q.position()), q.heading + angle};
    }
};

inline Point mirror(Point p) { return {p.x, -p.y}; }
inline Configuration mirror(const Configuration& c) { return {c.x, -c.y, -c.heading}; }

}  // namespace oracle
