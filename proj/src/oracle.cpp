#include "windfarm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace windfarm {

OverlapEstimate mc_overlap(double wake_radius, double rotor_radius, double lateral_offset,
                           std::int64_t samples, std::uint64_t rng_seed) {
    if (samples < 10'000) {
        throw std::invalid_argument("mc_overlap: at least 1e4 samples are required");
    }
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::int64_t inside = 0;
    std::int64_t hits = 0;
    while (inside < samples) {
        const double u = unit(rng);
        const double v = unit(rng);
        if (u * u + v * v > 1.0) {
            continue;
        }
        ++inside;
        // rotor centred at (offset, 0), wake at the origin
        const double x = lateral_offset + rotor_radius * u;
        const double y = rotor_radius * v;
        if (x * x + y * y <= wake_radius * wake_radius) {
            ++hits;
        }
    }
    const double disc = std::numbers::pi * rotor_radius * rotor_radius;
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    return {disc * p, disc * std::sqrt(p * (1.0 - p) / static_cast<double>(samples))};
}

namespace {

double naive_power(const PowerCurve& c, double u, double v) {
    if (v >= c.cut_out || u < c.cut_in || u >= c.cut_out) {
        return 0.0;
    }
    if (u >= c.rated_speed) {
        return c.rated_power;
    }
    const double p = c.poly[0] * std::pow(u, 4) + c.poly[1] * std::pow(u, 3) +
                     c.poly[2] * std::pow(u, 2) + c.poly[3] * u + c.poly[4];
    return std::min(std::max(p, 0.0), c.rated_power);
}

}  // namespace

EvaluationResult straight_line_eval(const Points& positions, const WindScenario& scenario,
                                    const TurbineSpec& spec) {
    const Index n = positions.cols();
    const double k = 0.5 / std::log(spec.hub_height / spec.surface_roughness);
    const double r0 = spec.rotor_radius;
    const double rotor_area = std::numbers::pi * r0 * r0;
    const double root = std::sqrt(1.0 - spec.thrust_coefficient);
    const double initial =
        spec.deficit_numerator == DeficitNumerator::standard ? 1.0 - root : 1.0 + root;

    EvaluationResult r;
    r.per_turbine_speed = Eigen::VectorXd::Zero(n);
    r.per_turbine_power = Eigen::VectorXd::Zero(n);
    double reference = 0.0;
    for (const WindBin& bin : scenario.bins) {
        const Points frame = rotate_frame(positions, bin.direction);
        double farm = 0.0;
        double free = 0.0;
        for (Index i = 0; i < n; ++i) {
            double sum_sq = 0.0;
            for (Index j = 0; j < n; ++j) {
                if (j == i) continue;
                const double d = frame(1, j) - frame(1, i);
                if (d <= 1e-9) continue;
                const double x = std::abs(frame(0, j) - frame(0, i));
                const double a = circle_overlap_area(r0 + k * d, r0, x);
                if (a <= 0.0) continue;
                const double dv = initial / ((1.0 + k * d / r0) * (1.0 + k * d / r0)) * a / rotor_area;
                sum_sq += dv * dv;
            }
            const double deficit = std::min(std::sqrt(sum_sq), 1.0);
            const double u = bin.speed * (1.0 - deficit);
            const double p = naive_power(spec.power, u, bin.speed);
            farm += p;
            free += naive_power(spec.power, bin.speed, bin.speed);
            r.per_turbine_speed[i] += bin.weight * u;
            r.per_turbine_power[i] += bin.weight * p;
        }
        r.expected_power += bin.weight * farm;
        reference += bin.weight * free;
    }
    r.wake_free_power = reference;
    r.efficiency = reference > 0.0 ? r.expected_power / reference : 0.0;
    return r;
}

ExhaustiveResult exhaustive_best(const Grid& grid, Index turbines, const WindScenario& scenario,
                                 const TurbineSpec& spec) {
    const Index m = grid.size();
    if (turbines < 1 || turbines > m) {
        throw std::invalid_argument("exhaustive_best: need 1 <= N <= M");
    }
    if (log10_solution_space(m, turbines) > std::log10(kExhaustiveCap) + 1e-9) {
        throw std::invalid_argument("exhaustive_best: C(M, N) exceeds the enumeration cap of 1e6");
    }
    std::vector<Index> subset(static_cast<std::size_t>(turbines));
    for (Index i = 0; i < turbines; ++i) subset[static_cast<std::size_t>(i)] = i;

    ExhaustiveResult best;
    best.efficiency = -1.0;
    Points positions(2, turbines);
    while (true) {
        for (Index i = 0; i < turbines; ++i) {
            positions.col(i) = grid.points.col(subset[static_cast<std::size_t>(i)]);
        }
        const double eta = straight_line_eval(positions, scenario, spec).efficiency;
        ++best.evaluated;
        if (eta > best.efficiency) {
            best.efficiency = eta;
            best.layout = Layout(subset, m);
        }
        // next combination in lexicographic order
        Index pos = turbines - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == m - turbines + pos) --pos;
        if (pos < 0) break;
        ++subset[static_cast<std::size_t>(pos)];
        for (Index q = pos + 1; q < turbines; ++q) {
            subset[static_cast<std::size_t>(q)] = subset[static_cast<std::size_t>(q - 1)] + 1;
        }
    }
    return best;
}

std::vector<CheckResult> run_oracle_suite(const LayoutProblem& problem, const GAParams& params) {
    std::vector<CheckResult> checks;
    std::mt19937_64 rng(std::bit_cast<std::uint64_t>(params.chaos_seed));
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    {
        CheckResult c{"overlap_vs_monte_carlo", true, 0.0, 3.0};
        for (int t = 0; t < 20; ++t) {
            const double a = 20.0 + 180.0 * uni(rng);
            const double b = 20.0 + 180.0 * uni(rng);
            const double x = (a + b) * 1.1 * uni(rng);
            const double exact = circle_overlap_area(a, b, x);
            const OverlapEstimate mc = mc_overlap(a, b, x, 200'000, rng());
            const double z = mc.standard_error > 0.0 ? std::abs(exact - mc.area) / mc.standard_error
                                                     : (std::abs(exact - mc.area) > 1e-9 ? 1e9 : 0.0);
            c.max_deviation = std::max(c.max_deviation, z);
        }
        c.passed = c.max_deviation <= c.tolerance;
        checks.push_back(c);
    }
    {
        CheckResult c{"evaluator_vs_straight_line", true, 0.0, 1e-9};
        const Index n = std::min<Index>(problem.turbines, problem.grid.size());
        ChaosStream stream(derive_seed(params.chaos_seed, 101));
        for (int t = 0; t < 20; ++t) {
            const Layout layout = random_layout(stream, problem.grid.size(), n);
            const Points pos = problem.grid.positions(layout);
            const EvaluationResult main = expected_farm_power(pos, problem.scenario, problem.spec);
            const EvaluationResult naive = straight_line_eval(pos, problem.scenario, problem.spec);
            const auto rel = [](double a, double b) {
                return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
            };
            c.max_deviation = std::max({c.max_deviation, rel(main.expected_power, naive.expected_power),
                                        rel(main.efficiency, naive.efficiency)});
            for (Index i = 0; i < n; ++i) {
                c.max_deviation = std::max({c.max_deviation,
                                            rel(main.per_turbine_power[i], naive.per_turbine_power[i]),
                                            rel(main.per_turbine_speed[i], naive.per_turbine_speed[i])});
            }
        }
        c.passed = c.max_deviation <= c.tolerance;
        checks.push_back(c);
    }
    {
        CheckResult c{"aga_vs_exhaustive_small_grid", true, 0.0, 1e-9};
        LayoutProblem small{build_grid(500.0, 5), 3, problem.scenario, problem.spec};
        const ExhaustiveResult truth = exhaustive_best(small.grid, 3, small.scenario, small.spec);
        GAParams p = params;
        p.max_generations = 500;
        p.target_efficiency = truth.efficiency;
        const OptimizationResult found = run_aga(small, p);
        c.max_deviation = std::max(0.0, truth.efficiency - found.best_evaluation.efficiency);
        c.passed = c.max_deviation <= c.tolerance;
        checks.push_back(c);
    }
    {
        CheckResult c{"overlap_continuity", true, 0.0, 1e-3};
        for (double a : {30.0, 63.0, 150.0}) {
            for (double b : {40.0, 63.0}) {
                for (double edge : {a + b, std::abs(a - b)}) {
                    if (edge <= 1e-6) continue;
                    const double lo = circle_overlap_area(a, b, edge - 1e-6);
                    const double hi = circle_overlap_area(a, b, edge + 1e-6);
                    c.max_deviation = std::max(c.max_deviation, std::abs(hi - lo));
                }
            }
        }
        c.passed = c.max_deviation <= c.tolerance;
        checks.push_back(c);
    }
    return checks;
}

}  // namespace windfarm
