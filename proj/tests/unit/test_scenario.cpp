#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "windfarm/scenario.hpp"

using namespace windfarm;

TEST(Grid, DefaultHas441CandidatesAt200m) {
    const Grid g = build_grid(4000.0, 20);
    EXPECT_EQ(g.size(), 441);
    EXPECT_DOUBLE_EQ(g.edge(), 200.0);
    EXPECT_EQ(g.points.col(0), Point(0, 0));
    EXPECT_EQ(g.points.col(g.index_of(0, 20)), Point(4000, 0));
    EXPECT_EQ(g.points.col(g.index_of(20, 0)), Point(0, 4000));
    EXPECT_EQ(g.points.col(440), Point(4000, 4000));
}

TEST(Grid, SingleCell) {
    const Grid g = build_grid(100.0, 1);
    EXPECT_EQ(g.size(), 4);
}

TEST(Grid, RejectsBadSizes) {
    EXPECT_THROW(build_grid(4000.0, 0), std::invalid_argument);
    EXPECT_THROW(build_grid(0.0, 20), std::invalid_argument);
    EXPECT_THROW(build_grid(-5.0, 20), std::invalid_argument);
}

TEST(Grid, PositionsFollowLayoutOrder) {
    const Grid g = build_grid(400.0, 2);
    const Points p = g.positions(Layout(std::vector<Index>{8, 1}, g.size()));
    EXPECT_EQ(p.col(0), Point(200, 0));
    EXPECT_EQ(p.col(1), Point(400, 400));
    EXPECT_THROW(g.positions(Layout(std::vector<Index>{1}, 10)), std::invalid_argument);
}

TEST(SolutionSpace, BinomialAndPowerOfTwo) {
    // C(441, 16) = 7.42699e28 and 2^441 = 5.67843e132.
    EXPECT_NEAR(log10_solution_space(441, 16), std::log10(7.42699e28), 1e-5);
    EXPECT_NEAR(log10_unconstrained_solution_space(441), std::log10(5.67843e132), 1e-5);
    EXPECT_EQ(log10_solution_space(10, 0), 0.0);
    EXPECT_EQ(log10_solution_space(10, 10), 0.0);
    EXPECT_THROW(log10_solution_space(10, 11), std::invalid_argument);
}

TEST(Scenario, SingleBin) {
    const WindScenario s = single_bin(30.0, 12.0);
    ASSERT_EQ(s.bins.size(), 1u);
    EXPECT_EQ(s.bins[0].weight, 1.0);
    EXPECT_NO_THROW(require_normalized(s));
    EXPECT_THROW(single_bin(0.0, -1.0), std::invalid_argument);
}

TEST(Scenario, UniformDirectionsTwelveSectors) {
    const WindScenario s = uniform_directions(12.0, 12);
    ASSERT_EQ(s.bins.size(), 12u);
    for (std::size_t k = 0; k < 12; ++k) {
        EXPECT_DOUBLE_EQ(s.bins[k].direction, 30.0 * double(k));
        EXPECT_EQ(s.bins[k].speed, 12.0);
    }
    EXPECT_NEAR(s.total_weight(), 1.0, 1e-15);
    EXPECT_THROW(uniform_directions(12.0, 0), std::invalid_argument);
}

TEST(Scenario, RequireNormalizedRejectsBadWeights) {
    WindScenario s = uniform_directions(10.0, 4);
    s.bins[0].weight = -0.25;
    EXPECT_THROW(require_normalized(s), std::invalid_argument);
    s = uniform_directions(10.0, 4);
    s.bins[0].weight += 1e-6;
    EXPECT_THROW(require_normalized(s), std::invalid_argument);
    EXPECT_THROW(require_normalized(WindScenario{}), std::invalid_argument);
}

TEST(Weibull, CdfEdges) {
    EXPECT_EQ(weibull_cdf(0.0, 2.1, 10.0), 0.0);
    EXPECT_EQ(weibull_cdf(std::numeric_limits<double>::infinity(), 2.1, 10.0), 1.0);
    EXPECT_NEAR(weibull_cdf(10.0, 2.1, 10.0), 1.0 - std::exp(-1.0), 1e-15);
}

TEST(Weibull, DiscretisedMeanMatchesReference) {
    WeibullRoseOptions o = default_weibull_rose();
    o.scale = 10.0;
    o.direction_weights = {1.0};
    const WindScenario s = weibull_rose(o);
    double mean = 0.0;
    for (const WindBin& b : s.bins) mean += b.weight * b.speed;
    EXPECT_NEAR(mean, 8.855935, 1e-6);
    EXPECT_NEAR(mean, 10.0 * std::tgamma(1.0 + 1.0 / 2.1), 2e-3);  // analytic 8.856936
}

TEST(Weibull, UnboundedLastBinUsesTailMean) {
    WeibullRoseOptions o;
    o.shape = 2.0;
    o.scale = 10.0;
    o.speed_edges = {0.0, 10.0, std::numeric_limits<double>::infinity()};
    o.direction_weights = {1.0};
    const WindScenario s = weibull_rose(o);
    ASSERT_EQ(s.bins.size(), 2u);
    EXPECT_NEAR(s.total_weight(), 1.0, 1e-12);
    // Rayleigh with scale 10: E[V | V > 10] = 10 + 10 * e * sqrt(pi)/2 * erfc(1)
    const double tail = 10.0 + 10.0 * std::exp(1.0) * std::sqrt(M_PI) / 2.0 * std::erfc(1.0);
    EXPECT_NEAR(s.bins[1].speed, tail, 1e-6);
}

TEST(Weibull, DefaultRoseIsNormalisedOverTwelveSectors) {
    const WindScenario s = weibull_rose(default_weibull_rose());
    EXPECT_EQ(s.sector_count, 12);
    EXPECT_EQ(s.bins.size(), 12u * 30u);
    EXPECT_NEAR(s.total_weight(), 1.0, 1e-12);
    EXPECT_NO_THROW(require_normalized(s));
}

TEST(Weibull, RandomRosesStayNormalised) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> shape(0.8, 4.0), scale(3.0, 15.0), w(0.0, 1.0);
    std::uniform_int_distribution<int> sectors(1, 36), top(5, 40);
    for (int t = 0; t < 10000; ++t) {
        WeibullRoseOptions o;
        o.shape = shape(rng);
        o.scale = scale(rng);
        const int vmax = top(rng);
        for (int v = 0; v <= vmax; v += 2) o.speed_edges.push_back(v);
        o.direction_weights.resize(static_cast<std::size_t>(sectors(rng)));
        double total = 0.0;
        for (double& x : o.direction_weights) total += (x = w(rng) + 1e-3);
        for (double& x : o.direction_weights) x /= total;
        const WindScenario s = weibull_rose(o);
        ASSERT_NEAR(s.total_weight(), 1.0, kWeightTolerance);
        for (const WindBin& b : s.bins) ASSERT_GE(b.weight, 0.0);
    }
}

TEST(Weibull, RejectsBadOptions) {
    WeibullRoseOptions o = default_weibull_rose();
    o.shape = 0.0;
    EXPECT_THROW(weibull_rose(o), std::invalid_argument);
    o = default_weibull_rose();
    o.direction_weights = {0.5, 0.4};
    EXPECT_THROW(weibull_rose(o), std::invalid_argument);
    o = default_weibull_rose();
    o.speed_edges = {5.0, 3.0};
    EXPECT_THROW(weibull_rose(o), std::invalid_argument);
    o = default_weibull_rose();
    o.speed_edges = {0.0};
    EXPECT_THROW(weibull_rose(o), std::invalid_argument);
}

TEST(UniformLayout, LineSitsOnTheMiddleRow) {
    const Grid g = build_grid(4000.0, 20);
    const Layout l = uniform_layout(g, 16);
    ASSERT_EQ(l.size(), 16);
    for (Index i : l.occupied()) {
        EXPECT_EQ(i / 21, 10);
    }
    EXPECT_EQ(l.occupied().front() % 21, 2);
    EXPECT_EQ(l.occupied().back() % 21, 17);
}

TEST(UniformLayout, FullRowAndSingleTurbine) {
    const Grid g = build_grid(4000.0, 20);
    const Layout full = uniform_layout(g, 21);
    EXPECT_EQ(full.occupied().front(), g.index_of(10, 0));
    EXPECT_EQ(full.occupied().back(), g.index_of(10, 20));
    EXPECT_EQ(uniform_layout(g, 1).occupied(), std::vector<Index>{g.index_of(10, 10)});
    EXPECT_THROW(uniform_layout(g, 22), std::invalid_argument);
    EXPECT_THROW(uniform_layout(g, 0), std::invalid_argument);
}

TEST(UniformLayout, SquareLattice) {
    const Grid g = build_grid(4000.0, 20);
    const Layout l = uniform_layout(g, 16, UniformPattern::square_lattice);
    EXPECT_EQ(l.size(), 16);
    // 4 x 4 with stride 6 starting at offset 1
    EXPECT_TRUE(l.contains(g.index_of(1, 1)));
    EXPECT_TRUE(l.contains(g.index_of(19, 19)));
    EXPECT_EQ(uniform_layout(g, 10, UniformPattern::square_lattice).size(), 10);
}
