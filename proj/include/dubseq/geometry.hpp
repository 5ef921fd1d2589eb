#pragma once
// Planar points, vehicle configurations and angle helpers shared by every
// other header in the library.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dubseq {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Absolute tolerance used for angle comparisons (radians).
inline constexpr double kAngleTolerance = 1e-9;

/// Relative slack accepted on the 2ρ adjacent-separation requirement so
/// that rigidly moved instances with spacing exactly 2ρ stay valid.
inline constexpr double kSeparationSlack = 1e-9;

// ── errors ──────────────────────────────────────────────────────────────

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two points that must be at least 2ρ apart are closer than that.
struct SeparationViolation : Error {
    using Error::Error;
};

/// Paths handed to concatenate() do not join end to start.
struct DiscontinuityError : Error {
    using Error::Error;
};

/// A side-constrained one-sided path does not exist for the requested heading.
struct InfeasibleHeading : Error {
    using Error::Error;
};

/// Rejection sampling in the instance generator made no progress.
struct GenerationStalled : Error {
    using Error::Error;
};

/// Malformed instance document.
struct ParseError : Error {
    using Error::Error;
};

/// Well-formed instance document that violates an Instance invariant.
struct ValidationError : Error {
    using Error::Error;
};

// ── angles ──────────────────────────────────────────────────────────────

/// Maps any finite angle into [0, 2π).
[[nodiscard]] inline double normalize_angle(double a) noexcept {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

/// Like normalize_angle() but values within kAngleTolerance below 2π
/// collapse to 0. Used for arc extents, where 2π - 1e-15 is rounding noise
/// on a turn that should not happen at all.
[[nodiscard]] inline double wrap_turn(double a) noexcept {
    const double r = normalize_angle(a);
    return (r > kTwoPi - kAngleTolerance) ? 0.0 : r;
}

/// Signed smallest difference a - b in (-π, π].
[[nodiscard]] inline double angle_diff(double a, double b) noexcept {
    double d = normalize_angle(a - b);
    if (d > kPi) d -= kTwoPi;
    return d;
}

// ── points and configurations ───────────────────────────────────────────

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) noexcept { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) noexcept { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point a) noexcept { return {s * a.x, s * a.y}; }
    friend bool operator==(const Point&, const Point&) = default;
};

[[nodiscard]] inline double norm(Point v) noexcept { return std::hypot(v.x, v.y); }
[[nodiscard]] inline double distance(Point a, Point b) noexcept { return norm(b - a); }
[[nodiscard]] inline double dot(Point a, Point b) noexcept { return a.x * b.x + a.y * b.y; }
[[nodiscard]] inline double cross(Point a, Point b) noexcept { return a.x * b.y - a.y * b.x; }

/// Direction angle of the vector from a to b, in [0, 2π).
[[nodiscard]] inline double bearing(Point a, Point b) noexcept {
    return normalize_angle(std::atan2(b.y - a.y, b.x - a.x));
}

[[nodiscard]] inline Point unit(double heading) noexcept {
    return {std::cos(heading), std::sin(heading)};
}

[[nodiscard]] inline bool is_finite(Point p) noexcept {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

/// Planar position plus heading. The heading is kept in [0, 2π).
struct Configuration {
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;

    Configuration() = default;
    Configuration(double x_, double y_, double heading_) : x(x_), y(y_), heading(normalize_angle(heading_)) {
        if (!std::isfinite(x_) || !std::isfinite(y_) || !std::isfinite(heading_))
            throw std::invalid_argument("Configuration: non-finite component");
    }
    Configuration(Point p, double heading_) : Configuration(p.x, p.y, heading_) {}

    [[nodiscard]] Point position() const noexcept { return {x, y}; }
};

inline void require_separation(Point a, Point b, double rho, const std::string& what) {
    const double d = distance(a, b);
    if (!(d >= 2.0 * rho * (1.0 - kSeparationSlack)))
        throw SeparationViolation(what + ": distance " + std::to_string(d) + " is below 2*rho = " +
                                  std::to_string(2.0 * rho));
}

}  // namespace dubseq
