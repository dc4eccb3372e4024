#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "windfarm/geometry.hpp"
#include "windfarm/oracle.hpp"

using namespace windfarm;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Rotation, ThirtyDegreesMatchesHighPrecisionReference) {
    const Point p = rotate_frame(Point(3.0, 4.0), 30.0);
    EXPECT_NEAR(p.x(), 0.59807621135331594, 1e-14);
    EXPECT_NEAR(p.y(), 4.9641016151377546, 1e-14);
}

TEST(Rotation, ZeroAngleIsIdentity) {
    const Point p = rotate_frame(Point(-12.5, 7.25), 0.0);
    EXPECT_EQ(p, Point(-12.5, 7.25));
}

TEST(Rotation, QuarterTurnsAreExact) {
    EXPECT_EQ(rotate_frame(Point(1.0, 0.0), 90.0), Point(0.0, 1.0));
    EXPECT_EQ(rotate_frame(Point(200.0, 400.0), 180.0), Point(-200.0, -400.0));
    EXPECT_EQ(rotate_frame(Point(1.0, 0.0), 270.0), Point(0.0, -1.0));
    EXPECT_EQ(rotate_frame(Point(1.0, 0.0), -90.0), Point(0.0, -1.0));
    EXPECT_EQ(rotate_frame(Point(1.0, 2.0), 360.0), Point(1.0, 2.0));
}

TEST(Rotation, PreservesNormsAndComposes) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ang(-720.0, 720.0), coord(-5000.0, 5000.0);
    for (int t = 0; t < 10000; ++t) {
        const Point p(coord(rng), coord(rng));
        const double a = ang(rng), b = ang(rng);
        const Point once = rotate_frame(p, a + b);
        const Point twice = rotate_frame(rotate_frame(p, a), b);
        ASSERT_NEAR(once.norm(), p.norm(), 1e-9 * (1.0 + p.norm()));
        ASSERT_NEAR((once - twice).norm(), 0.0, 1e-8 * (1.0 + p.norm()));
    }
}

TEST(Rotation, BlockOfPoints) {
    Points pts(2, 3);
    pts << 0, 1, 2, 0, 0, 0;
    const Points r = rotate_frame(pts, 90.0);
    EXPECT_EQ(r.row(0).norm(), 0.0);
    EXPECT_EQ(r(1, 2), 2.0);
}

TEST(Overlap, DisjointIsZero) {
    EXPECT_EQ(circle_overlap_area(100.0, 50.0, 200.0), 0.0);
    EXPECT_EQ(circle_overlap_area(100.0, 50.0, 150.0 + 1e-9), 0.0);
}

TEST(Overlap, ContainmentIsFullSmallerDisc) {
    EXPECT_DOUBLE_EQ(circle_overlap_area(100.0, 50.0, 0.0), kPi * 2500.0);
    EXPECT_DOUBLE_EQ(circle_overlap_area(100.0, 50.0, 30.0), kPi * 2500.0);
    EXPECT_DOUBLE_EQ(circle_overlap_area(40.0, 63.0, 10.0), kPi * 1600.0);
}

TEST(Overlap, LensMatchesQuadratureReference) {
    // High-precision quadrature of the chord length: 1700.98001045524
    EXPECT_NEAR(circle_overlap_area(100.0, 50.0, 120.0), 1700.98001045524, 1e-6);
}

TEST(Overlap, EqualRadiiAtZeroOffset) {
    EXPECT_DOUBLE_EQ(circle_overlap_area(63.0, 63.0, 0.0), kPi * 63.0 * 63.0);
}

TEST(Overlap, ContinuousAcrossRegimeBoundaries) {
    for (double a : {20.0, 63.0, 101.5, 300.0}) {
        for (double b : {10.0, 63.0, 120.0}) {
            for (double edge : {a + b, std::abs(a - b)}) {
                if (edge < 1e-3) continue;
                const double lo = circle_overlap_area(a, b, edge - 1e-7);
                const double hi = circle_overlap_area(a, b, edge + 1e-7);
                EXPECT_LT(std::abs(hi - lo), 1e-3) << a << ' ' << b << ' ' << edge;
            }
        }
    }
}

TEST(Overlap, MonotoneNonIncreasingInOffset) {
    double prev = circle_overlap_area(90.0, 63.0, 0.0);
    for (double c = 0.5; c < 160.0; c += 0.5) {
        const double now = circle_overlap_area(90.0, 63.0, c);
        ASSERT_LE(now, prev + 1e-9) << c;
        prev = now;
    }
}

TEST(Overlap, BoundedBySmallerDisc) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> r(1.0, 300.0);
    for (int t = 0; t < 10000; ++t) {
        const double a = r(rng), b = r(rng), c = (a + b) * 1.2 * std::uniform_real_distribution<>(0, 1)(rng);
        const double area = circle_overlap_area(a, b, c);
        ASSERT_GE(area, 0.0);
        ASSERT_LE(area, kPi * std::min(a, b) * std::min(a, b) * (1 + 1e-12));
        ASSERT_NEAR(area, circle_overlap_area(b, a, c), 1e-9 * (1.0 + area));
    }
}

TEST(Overlap, MonteCarloLensWithinTwoTenthsOfAPercent) {
    const OverlapEstimate mc = mc_overlap(100.0, 50.0, 120.0, 10'000'000, 99);
    const double exact = circle_overlap_area(100.0, 50.0, 120.0);
    EXPECT_LT(std::abs(mc.area - exact) / exact, 2e-3);
    EXPECT_LT(std::abs(mc.area - exact), 3.0 * mc.standard_error);
}

TEST(Overlap, RejectsInvalidInputs) {
    EXPECT_THROW(circle_overlap_area(0.0, 50.0, 10.0), std::invalid_argument);
    EXPECT_THROW(circle_overlap_area(10.0, -1.0, 10.0), std::invalid_argument);
    EXPECT_THROW(circle_overlap_area(10.0, 10.0, -1.0), std::invalid_argument);
    EXPECT_THROW(circle_overlap_area(std::nan(""), 10.0, 1.0), std::invalid_argument);
    EXPECT_THROW(circle_overlap_area(HUGE_VAL, 10.0, 1.0), std::invalid_argument);
}

TEST(Overlap, FloatInstantiation) {
    EXPECT_NEAR(circle_overlap_area(100.0f, 50.0f, 120.0f), 1700.98f, 0.05f);
}
