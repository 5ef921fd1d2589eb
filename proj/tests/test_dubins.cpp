#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "dubseq/dubins.hpp"
#include "oracles.hpp"

using namespace dubseq;

namespace {

constexpr double kRho = 100.0;

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

void expect_reaches(const DubinsPath& p, const Configuration& target) {
    const auto e = p.end();
    EXPECT_LE(distance(e.position(), target.position()), 1e-6 * p.rho());
    EXPECT_LE(std::abs(angle_diff(e.heading, target.heading)), 1e-6);
}

}  // namespace

TEST(DubinsShortest, AlignedHeadingsGiveStraightLine) {
    const auto p = dubins_shortest({0, 0, 0}, {4 * kRho, 0, 0}, kRho);
    EXPECT_EQ(p.word(), "S");
    EXPECT_NEAR(p.length(), 4 * kRho, 1e-9 * kRho);
}

TEST(DubinsShortest, SemicircleOnLeftCircle) {
    const auto p = dubins_shortest({0, 0, 0}, {0, 2 * kRho, kPi}, kRho);
    EXPECT_EQ(p.word(), "L");
    EXPECT_NEAR(p.length(), kPi * kRho, 1e-9 * kRho);
}

TEST(DubinsShortest, EndpointAndLengthInvariants) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const auto [a, b] = oracle::random_pair(rng, kRho);
        const auto p = dubins_shortest(a, b, kRho);
        expect_reaches(p, b);
        double sum = 0.0;
        for (const auto& s : p.segments()) sum += s.is_arc() ? kRho * s.extent : s.extent;
        EXPECT_NEAR(p.length(), sum, 1e-9 * sum);
        EXPECT_LE(p.segments().size(), 3u);
        EXPECT_GE(p.length(), distance(a.position(), b.position()) * (1 - 1e-12));
    }
}

TEST(DubinsShortest, NeverLongerThanAnyFeasibleWord) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 2000; ++i) {
        const auto [a, b] = oracle::random_pair(rng, kRho);
        const double len = dubins_shortest(a, b, kRho).length();
        for (DubinsWord w : kDubinsWords) {
            const auto prm = dubins_word(a, b, kRho, w);
            if (!prm) continue;
            EXPECT_LE(len, kRho * ((*prm)[0] + (*prm)[1] + (*prm)[2]) + 1e-9 * len);
        }
    }
}

// Tangent-circle construction is an independent route to the same minimum.
TEST(DubinsShortest, MatchesTangentConstruction) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 2000; ++i) {
        const auto [a, b] = oracle::random_pair(rng, kRho);
        const double expect = oracle::tangent_shortest(a, b, kRho);
        EXPECT_LE(rel_err(dubins_shortest(a, b, kRho).length(), expect), 1e-9) << "pair " << i;
    }
}

TEST(DubinsShortest, MatchesParametricSweepOnSubsample) {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 10; ++i) {
        const auto [a, b] = oracle::random_pair(rng, kRho);
        const double sweep = oracle::sweep_shortest(a, b, kRho, 20'000);
        EXPECT_LE(rel_err(dubins_shortest(a, b, kRho).length(), sweep), 1e-6);
    }
}

TEST(DubinsShortest, OnePlusPiBoundOnSeparatedPairs) {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 10'000; ++i) {
        const auto [a, b] = oracle::random_pair(rng, kRho);
        EXPECT_LE(dubins_length(a, b, kRho), (1 + kPi) * distance(a.position(), b.position()));
    }
}

TEST(DubinsShortest, MirrorSwapsTurnDirections) {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 1000; ++i) {
        const auto [a, b] = oracle::random_pair(rng, kRho);
        const auto p = dubins_shortest(a, b, kRho);
        const auto q = dubins_shortest(oracle::mirror(a), oracle::mirror(b), kRho);
        EXPECT_LE(rel_err(q.length(), p.length()), 1e-12);
        std::string swapped = p.word();
        for (char& c : swapped) c = c == 'L' ? 'R' : c == 'R' ? 'L' : c;
        EXPECT_EQ(q.word(), swapped);
    }
}

TEST(DubinsShortest, RigidMotionInvariance) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const auto [a, b] = oracle::random_pair(rng, kRho);
        const oracle::RigidMotion m{0.3 + 0.001 * i, {1234.5, -987.25}};
        EXPECT_LE(rel_err(dubins_length(m(a), m(b), kRho), dubins_length(a, b, kRho)), 1e-9);
    }
}

TEST(ShortestCS, TargetOnHeadingRay) {
    const auto p = shortest_cs({0, 0, 0}, {5 * kRho, 0}, kRho);
    EXPECT_EQ(p.word(), "S");
    EXPECT_NEAR(p.length(), 5 * kRho, 1e-9 * kRho);
}

TEST(ShortestCS, TargetOnLeftTurningCircle) {
    const auto p = shortest_cs({0, 0, 0}, {0, 2 * kRho}, kRho);
    EXPECT_EQ(p.word(), "L");
    EXPECT_NEAR(p.length(), kPi * kRho, 1e-9 * kRho);
}

TEST(ShortestCS, BelowTwoRhoIsAnError) {
    EXPECT_THROW((void)shortest_cs({0, 0, 0}, {1.5 * kRho, 0}, kRho), SeparationViolation);
    EXPECT_THROW((void)shortest_sc({-1.5 * kRho, 0}, {0, 0, 0}, kRho), SeparationViolation);
}

TEST(ShortestCS, EqualsMinOverFinalHeading) {
    std::mt19937_64 rng(18);
    constexpr int kHeadings = 10'000;
    for (int i = 0; i < 20; ++i) {
        const auto [a, b] = oracle::random_pair(rng, kRho);
        const auto cs = shortest_cs(a, b.position(), kRho);
        ASSERT_LE(distance(cs.end().position(), b.position()), 1e-6 * kRho);
        double grid_min = 1e300;
        for (int k = 0; k < kHeadings; ++k) {
            const double len = dubins_length(a, Configuration(b.position(), kTwoPi * k / kHeadings), kRho);
            EXPECT_GE(len, cs.length() * (1 - 1e-12));
            grid_min = std::min(grid_min, len);
        }
        // One grid step of final heading changes the length by at most ρ·step.
        EXPECT_LE(grid_min - cs.length(), kRho * kTwoPi / kHeadings + 1e-9);
    }
}

TEST(ShortestSC, StraightAndDegenerateArc) {
    const auto s = shortest_sc({-5 * kRho, 0}, {0, 0, 0}, kRho);
    EXPECT_EQ(s.word(), "S");
    EXPECT_NEAR(s.length(), 5 * kRho, 1e-9 * kRho);
    // Reversal of the CS semicircle: from (0,-2ρ) arriving at the origin heading east.
    const auto d = shortest_sc({0, -2 * kRho}, {0, 0, 0}, kRho);
    EXPECT_NEAR(d.length(), kPi * kRho, 1e-9 * kRho);
    expect_reaches(d, {0, 0, 0});
}

TEST(ShortestSC, EqualsReversedCS) {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 1000; ++i) {
        const auto [a, b] = oracle::random_pair(rng, kRho);
        const auto sc = shortest_sc(a.position(), b, kRho);
        expect_reaches(sc, b);
        EXPECT_LE(distance(sc.start().position(), a.position()), 1e-9 * kRho);
        const auto cs = shortest_cs(Configuration(b.position(), b.heading + kPi), a.position(), kRho);
        EXPECT_LE(rel_err(sc.length(), cs.length()), 1e-12);
    }
}

TEST(SamplePath, StraightLine) {
    const auto p = dubins_shortest({0, 0, 0}, {4 * kRho, 0, 0}, kRho);
    const auto pts = sample_path(p, kRho);
    ASSERT_EQ(pts.size(), 5u);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        EXPECT_NEAR(pts[i].x, kRho * static_cast<double>(i), 1e-9 * kRho);
        EXPECT_NEAR(pts[i].y, 0.0, 1e-9 * kRho);
    }
}

TEST(SamplePath, ArcPointsStayOnCircle) {
    const DubinsPath arc({0, 0, 0}, kRho, {{SegmentKind::Left, kPi}});
    for (const auto& q : sample_path(arc, 0.01 * kRho)) EXPECT_NEAR(distance(q, {0, kRho}), kRho, 1e-9 * kRho);
}

TEST(SamplePath, ChordSumBracketsLength) {
    std::mt19937_64 rng(20);
    for (int i = 0; i < 200; ++i) {
        const auto [a, b] = oracle::random_pair(rng, kRho);
        const auto p = dubins_shortest(a, b, kRho);
        const double step = 0.05 * kRho;
        const auto pts = sample_path(p, step);
        double chords = 0.0;
        for (std::size_t k = 1; k < pts.size(); ++k) {
            chords += distance(pts[k - 1], pts[k]);
            EXPECT_LE(distance(pts[k - 1], pts[k]), step * (1 + 1e-12));
        }
        EXPECT_LE(chords, p.length() * (1 + 1e-12));
        // Chord of an arc of length s on radius ρ falls short by at most s³/(24ρ²).
        const double pieces = std::ceil(p.length() / step) + 3;
        EXPECT_LE(p.length() - chords, pieces * std::pow(step, 3) / (24 * kRho * kRho) + 1e-9);
    }
}

TEST(Concatenate, IdentityAndMerge) {
    const auto p = dubins_shortest({0, 0, 0}, {3 * kRho, 2 * kRho, 1.0}, kRho);
    const std::vector<DubinsPath> one{p};
    const auto q = concatenate(one);
    EXPECT_EQ(q.word(), p.word());
    EXPECT_DOUBLE_EQ(q.length(), p.length());

    const std::vector<DubinsPath> two{DubinsPath({0, 0, 0}, kRho, {{SegmentKind::Straight, kRho}}),
                                      DubinsPath({kRho, 0, 0}, kRho, {{SegmentKind::Straight, 2 * kRho}})};
    const auto s = concatenate(two);
    EXPECT_EQ(s.word(), "S");
    EXPECT_NEAR(s.length(), 3 * kRho, 1e-12);
}

TEST(Concatenate, RejectsDiscontinuity) {
    const std::vector<DubinsPath> shuffled{DubinsPath({kRho, 0, 0}, kRho, {{SegmentKind::Straight, 2 * kRho}}),
                                           DubinsPath({0, 0, 0}, kRho, {{SegmentKind::Straight, kRho}})};
    EXPECT_THROW((void)concatenate(shuffled), DiscontinuityError);
    const std::vector<DubinsPath> kinked{DubinsPath({0, 0, 0}, kRho, {{SegmentKind::Straight, kRho}}),
                                         DubinsPath({kRho, 0, 0.1}, kRho, {{SegmentKind::Straight, kRho}})};
    EXPECT_THROW((void)concatenate(kinked), DiscontinuityError);
}

TEST(LocateWaypoints, FindsPointsInOrder) {
    const DubinsPath p({0, 0, 0}, kRho, {{SegmentKind::Straight, kRho}, {SegmentKind::Left, kPi / 2},
                                         {SegmentKind::Straight, kRho}});
    const std::vector<Point> wps{{0, 0}, {kRho, 0}, {2 * kRho, kRho}, {2 * kRho, 2 * kRho}};
    const auto st = locate_waypoints(p, wps, 1e-6 * kRho);
    ASSERT_TRUE(st);
    EXPECT_NEAR((*st)[1], kRho, 1e-9);
    EXPECT_NEAR((*st)[2], kRho + kRho * kPi / 2, 1e-6);
    EXPECT_NEAR((*st)[3], p.length(), 1e-6);
    const std::vector<Point> out_of_order{{kRho, 0}, {0, 0}};
    EXPECT_FALSE(locate_waypoints(p, out_of_order, 1e-6 * kRho));
}

TEST(Segment, InvalidExtentsRejected) {
    EXPECT_THROW(DubinsPath({0, 0, 0}, kRho, {{SegmentKind::Left, 7.0}}), std::invalid_argument);
    EXPECT_THROW(DubinsPath({0, 0, 0}, kRho, {{SegmentKind::Straight, -1.0}}), std::invalid_argument);
    EXPECT_THROW(DubinsPath({0, 0, 0}, 0.0), std::invalid_argument);
}
