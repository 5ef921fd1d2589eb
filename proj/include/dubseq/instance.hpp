#pragma once
// Waypoint sequences and the seeded random instance generator.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dubseq/geometry.hpp"

namespace dubseq {

struct Instance {
    std::vector<Point> points;
    double rho = 1.0;
    std::optional<std::uint64_t> seed;

    [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws ValidationError naming the first violated invariant.
inline void validate(const Instance& inst) {
    if (!(inst.rho > 0.0) || !std::isfinite(inst.rho))
        throw ValidationError("rho must be a positive finite number");
    if (inst.points.size() < 3)
        throw ValidationError("an instance needs at least 3 points, got " + std::to_string(inst.points.size()));
    for (std::size_t i = 0; i < inst.points.size(); ++i)
        if (!is_finite(inst.points[i])) throw ValidationError("point " + std::to_string(i) + " is not finite");
    for (std::size_t i = 0; i + 1 < inst.points.size(); ++i) {
        const double d = distance(inst.points[i], inst.points[i + 1]);
        if (!(d >= 2.0 * inst.rho * (1.0 - kSeparationSlack))) {
            std::ostringstream os;
            os.precision(17);
            os << "adjacent points " << i << " and " << i + 1 << " are " << d << " apart, less than 2*rho = "
               << 2.0 * inst.rho;
            throw ValidationError(os.str());
        }
    }
}

/// Sampling window used when none is given: 10·ρ·√n on a side.
[[nodiscard]] inline double default_extent(std::size_t n, double rho) noexcept {
    return 10.0 * rho * std::sqrt(static_cast<double>(n));
}

/// SplitMix64 finalizer; derives independent per-instance seeds from a master seed.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline constexpr std::size_t kMaxConsecutiveRejections = 1'000'000;

/// Points drawn i.i.d. uniform on [0, extent]² by std::mt19937_64 (whose
/// output sequence is fixed by the C++ standard); each 64-bit draw is mapped
/// to [0,1) through its top 53 bits, so instances are identical on every
/// platform. A candidate closer than 2ρ to its predecessor is rejected.
[[nodiscard]] inline Instance generate(std::size_t n, double rho, double extent, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("generate: n must be at least 3");
    if (!(rho > 0.0)) throw std::invalid_argument("generate: rho must be positive");
    if (!(extent >= 4.0 * rho)) throw std::invalid_argument("generate: extent must be at least 4*rho");
    std::mt19937_64 rng(seed);
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * extent; };

    Instance inst;
    inst.rho = rho;
    inst.seed = seed;
    inst.points.reserve(n);
    inst.points.push_back({uniform(), uniform()});
    std::size_t rejections = 0;
    while (inst.points.size() < n) {
        const Point cand{uniform(), uniform()};
        if (distance(cand, inst.points.back()) >= 2.0 * rho) {
            inst.points.push_back(cand);
            rejections = 0;
        } else if (++rejections >= kMaxConsecutiveRejections) {
            throw GenerationStalled("generate: " + std::to_string(rejections) + " consecutive rejections");
        }
    }
    return inst;
}

[[nodiscard]] inline Instance generate(std::size_t n, double rho, std::uint64_t seed) {
    return generate(n, rho, default_extent(n, rho), seed);
}

[[nodiscard]] inline double euclidean_length(const Instance& inst) noexcept {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < inst.points.size(); ++i) total += distance(inst.points[i], inst.points[i + 1]);
    return total;
}

}  // namespace dubseq
