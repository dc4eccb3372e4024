#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "windfarm/oracle.hpp"

using namespace windfarm;

TEST(McOverlap, DisjointIsExactlyZero) {
    const OverlapEstimate e = mc_overlap(50.0, 63.0, 200.0, 10'000);
    EXPECT_EQ(e.area, 0.0);
    EXPECT_EQ(e.standard_error, 0.0);
}

TEST(McOverlap, ContainmentIsFullDisc) {
    const OverlapEstimate e = mc_overlap(300.0, 63.0, 10.0, 10'000);
    EXPECT_DOUBLE_EQ(e.area, std::numbers::pi * 63.0 * 63.0);
}

TEST(McOverlap, AgreesWithClosedFormOnRandomTriples) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> r(20.0, 200.0), u(0.0, 1.0);
    for (int t = 0; t < 30; ++t) {
        const double a = r(rng), b = r(rng), c = (a + b) * u(rng);
        const OverlapEstimate e = mc_overlap(a, b, c, 200'000, rng());
        const double exact = circle_overlap_area(a, b, c);
        EXPECT_LE(std::abs(e.area - exact), 3.0 * e.standard_error + 1e-9) << a << ' ' << b << ' ' << c;
    }
}

TEST(McOverlap, RejectsTooFewSamples) {
    EXPECT_THROW(mc_overlap(10.0, 10.0, 5.0, 9'999), std::invalid_argument);
}

TEST(StraightLine, SingleTurbineIsCurveValue) {
    Points p(2, 1);
    p << 100, 100;
    const EvaluationResult e = straight_line_eval(p, single_bin(0.0, 12.0), TurbineSpec{});
    EXPECT_NEAR(e.expected_power, 4608.3257, 1e-9);
}

TEST(StraightLine, MatchesMainEvaluatorOnRandomLayouts) {
    const Grid g = build_grid(4000.0, 20);
    const WindScenario rose = weibull_rose(default_weibull_rose());
    ChaosStream s(0.53);
    for (int t = 0; t < 50; ++t) {
        const Points pos = g.positions(random_layout(s, g.size(), 16));
        const EvaluationResult a = expected_farm_power(pos, rose, TurbineSpec{});
        const EvaluationResult b = straight_line_eval(pos, rose, TurbineSpec{});
        ASSERT_NEAR(a.expected_power, b.expected_power, 1e-9 * b.expected_power);
        ASSERT_NEAR(a.efficiency, b.efficiency, 1e-9 * b.efficiency);
        for (Index i = 0; i < 16; ++i) {
            ASSERT_NEAR(a.per_turbine_speed[i], b.per_turbine_speed[i], 1e-9 * b.per_turbine_speed[i]);
            ASSERT_NEAR(a.per_turbine_power[i], b.per_turbine_power[i], 1e-9 * (1.0 + b.per_turbine_power[i]));
        }
    }
}

TEST(Exhaustive, CrosswindPairIsWakeFree) {
    const Grid g = build_grid(400.0, 2);
    const ExhaustiveResult r = exhaustive_best(g, 2, single_bin(0.0, 12.0), TurbineSpec{});
    EXPECT_EQ(r.efficiency, 1.0);
    EXPECT_EQ(r.evaluated, 36);
    // First wake-free subset in lexicographic order.
    EXPECT_EQ(r.layout.occupied(), (std::vector<Index>{0, 1}));
}

TEST(Exhaustive, FullLayoutIsUnique) {
    const Grid g = build_grid(400.0, 2);
    const ExhaustiveResult r = exhaustive_best(g, 9, single_bin(0.0, 12.0), TurbineSpec{});
    EXPECT_EQ(r.evaluated, 1);
    EXPECT_EQ(r.layout.size(), 9);
}

TEST(Exhaustive, RejectsHugeInstances) {
    const Grid g = build_grid(4000.0, 20);
    EXPECT_THROW(exhaustive_best(g, 16, single_bin(0.0, 12.0), TurbineSpec{}), std::invalid_argument);
}

TEST(Exhaustive, AgaFindsTheOptimumOnFiveByFiveGrid) {
    const Grid g = build_grid(500.0, 5);
    for (const WindScenario& s : {single_bin(0.0, 12.0), uniform_directions(12.0, 12)}) {
        const ExhaustiveResult truth = exhaustive_best(g, 3, s, TurbineSpec{});
        EXPECT_EQ(truth.evaluated, 7140);
        GAParams p;
        p.max_generations = 500;
        p.target_efficiency = truth.efficiency;
        const OptimizationResult found = run_aga(LayoutProblem{g, 3, s, TurbineSpec{}}, p);
        EXPECT_NEAR(found.best_evaluation.efficiency, truth.efficiency, 1e-12);
    }
}

TEST(OracleSuite, AllChecksPassOnDefaults) {
    const LayoutProblem p{build_grid(4000.0, 20), 16, single_bin(0.0, 12.0), TurbineSpec{}};
    const auto checks = run_oracle_suite(p, GAParams{});
    ASSERT_EQ(checks.size(), 4u);
    for (const CheckResult& c : checks) {
        EXPECT_TRUE(c.passed) << c.name << " deviation " << c.max_deviation;
    }
}
