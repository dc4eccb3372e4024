#include "windfarm/study.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>

#include <json.hpp>

namespace windfarm {

std::vector<ShrinkSweepPoint> shrink_sweep(std::span<const double> edges,
                                           const LayoutProblem& base, const GAParams& params,
                                           int repeats, SpacingCheck spacing) {
    if (edges.empty()) {
        throw std::invalid_argument("shrink_sweep: no edges given");
    }
    if (repeats < 1) {
        throw std::invalid_argument("shrink_sweep: repeats >= 1");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!(edges[i] > 0.0) || (i > 0 && !(edges[i] < edges[i - 1]))) {
            throw std::invalid_argument("shrink_sweep: edges must be positive and strictly descending");
        }
        if (spacing == SpacingCheck::strict && edges[i] < 2.0 * base.spec.rotor_radius) {
            throw SpacingInfeasible("spacing infeasible: edge " + std::to_string(edges[i]) +
                                    " m is below the rotor diameter " +
                                    std::to_string(2.0 * base.spec.rotor_radius) + " m");
        }
    }

    const int cells = base.grid.cells_per_side;
    std::vector<ShrinkSweepPoint> sweep;
    for (double edge : edges) {
        LayoutProblem problem = base;
        problem.grid = build_grid(edge * cells, cells);
        Eigen::VectorXd powers(repeats);
        for (int r = 0; r < repeats; ++r) {
            GAParams run = params;
            run.chaos_seed = derive_seed(params.chaos_seed, r);
            powers[r] = run_aga(problem, run).best_evaluation.expected_power;
        }
        ShrinkSweepPoint p;
        p.edge = edge;
        p.area_fraction = (edge / edges[0]) * (edge / edges[0]);
        p.mean_power = powers.mean();
        p.runs = repeats;
        if (repeats > 1) {
            const double var = (powers.array() - p.mean_power).square().sum() / (repeats - 1);
            p.standard_error = std::sqrt(var / repeats);
        }
        sweep.push_back(p);
    }
    for (ShrinkSweepPoint& p : sweep) {
        p.power_fraction = p.mean_power / sweep.front().mean_power;
    }
    return sweep;
}

double PolyFit::operator()(double x) const {
    const double t = (x - center) / scale;
    return ((scaled_coefficients[3] * t + scaled_coefficients[2]) * t + scaled_coefficients[1]) * t +
           scaled_coefficients[0];
}

PolyFit fit_poly3(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("fit_poly3: x and y differ in length");
    }
    if (x.size() < 4) {
        throw std::invalid_argument("fit_poly3: at least 4 points are required");
    }
    const Eigen::Map<const Eigen::VectorXd> xs(x.data(), static_cast<Index>(x.size()));
    const Eigen::Map<const Eigen::VectorXd> ys(y.data(), static_cast<Index>(y.size()));

    PolyFit fit;
    fit.center = xs.mean();
    fit.scale = (xs.array() - fit.center).abs().maxCoeff();
    if (!(fit.scale > 0.0)) {
        throw std::invalid_argument("fit_poly3: rank-deficient design (all x equal)");
    }
    const Eigen::ArrayXd t = (xs.array() - fit.center) / fit.scale;
    Eigen::MatrixXd design(xs.size(), 4);
    design.col(0).setOnes();
    design.col(1) = t.matrix();
    design.col(2) = t.square().matrix();
    design.col(3) = t.cube().matrix();

    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < 4) {
        throw std::invalid_argument("fit_poly3: rank-deficient design (fewer than 4 distinct x)");
    }
    fit.scaled_coefficients = qr.solve(ys);
    fit.residual_norm = (design * fit.scaled_coefficients - ys).norm();

    // Expand sum_k s_k ((x - c) / h)^k into powers of x.
    constexpr double binomial[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
    for (int k = 0; k < 4; ++k) {
        const double sk = fit.scaled_coefficients[k] / std::pow(fit.scale, k);
        for (int j = 0; j <= k; ++j) {
            fit.coefficients[j] += sk * binomial[k][j] * std::pow(-fit.center, k - j);
        }
    }
    return fit;
}

BudgetResult power_drop_at_budget(std::span<const ShrinkSweepPoint> sweep, double budget) {
    if (sweep.empty()) {
        throw std::invalid_argument("power_drop_at_budget: empty sweep");
    }
    if (!(budget >= 0.0 && budget < 1.0)) {
        throw std::invalid_argument("power_drop_at_budget: budget must lie in [0, 1)");
    }
    std::vector<ShrinkSweepPoint> points(sweep.begin(), sweep.end());
    std::sort(points.begin(), points.end(),
              [](const ShrinkSweepPoint& a, const ShrinkSweepPoint& b) { return a.edge > b.edge; });
    const double baseline = points.front().edge;
    const auto drop_of = [](const ShrinkSweepPoint& p) { return 1.0 - p.power_fraction; };
    constexpr double slack = 1e-12;

    if (std::none_of(points.begin(), points.end(),
                     [&](const ShrinkSweepPoint& p) { return drop_of(p) <= budget + slack; })) {
        throw std::invalid_argument("power_drop_at_budget: no sweep point satisfies the budget");
    }

    // Measured points admitted contiguously from the baseline.
    std::size_t last = 0;
    while (last + 1 < points.size() && drop_of(points[last + 1]) <= budget + slack) {
        ++last;
    }
    if (drop_of(points.front()) > budget + slack) {
        throw std::invalid_argument("power_drop_at_budget: the baseline itself exceeds the budget");
    }
    const bool all_admitted = last + 1 == points.size();
    const double lower = all_admitted ? points.back().edge : points[last + 1].edge;

    BudgetResult out;
    out.edge = points[last].edge;
    out.predicted_drop = drop_of(points[last]);
    if (points.size() >= 4) {
        std::vector<double> xs, ys;
        for (const ShrinkSweepPoint& p : points) {
            xs.push_back(p.edge);
            ys.push_back(p.power_fraction);
        }
        const PolyFit fit = fit_poly3(xs, ys);
        const int steps = 20000;
        const double step = (baseline - points.back().edge) / steps;
        out.edge = baseline;
        out.predicted_drop = 0.0;
        for (int s = 1; s <= steps; ++s) {
            const double e = s == steps ? points.back().edge : baseline - s * step;
            if (e < lower || (!all_admitted && e <= lower)) {
                break;
            }
            const double drop = 1.0 - fit(e);
            if (drop > budget + slack) {
                break;
            }
            out.edge = e;
            out.predicted_drop = drop;
        }
    }
    out.area_saving = 1.0 - (out.edge / baseline) * (out.edge / baseline);
    return out;
}

UniformComparison compare_uniform_vs_aga(const LayoutProblem& problem, const GAParams& params,
                                         UniformPattern pattern) {
    UniformComparison c;
    c.uniform = uniform_layout(problem.grid, problem.turbines, pattern);
    c.uniform_evaluation = expected_farm_power(c.uniform, problem.grid, problem.scenario, problem.spec);
    c.optimized = run_aga(problem, params);
    return c;
}

std::vector<ConvergenceRun> convergence_comparison(const LayoutProblem& problem,
                                                   const GAParams& params,
                                                   std::span<const double> seeds) {
    if (seeds.empty()) {
        throw std::invalid_argument("convergence_comparison: at least one seed is required");
    }
    std::vector<ConvergenceRun> runs;
    for (double seed : seeds) {
        GAParams p = params;
        p.chaos_seed = seed;
        runs.push_back({seed, run_aga(problem, p), run_conventional_ga(problem, p)});
    }
    return runs;
}

void write_sweep_csv(std::ostream& out, std::span<const ShrinkSweepPoint> sweep) {
    out << "# schema: windfarm.sweep/1\n";
    out << "edge,area_fraction,power_fraction,n_runs,stderr,mean_power_kw\n";
    char line[256];
    for (const ShrinkSweepPoint& p : sweep) {
        const double base = p.power_fraction > 0.0 ? p.mean_power / p.power_fraction : 0.0;
        const double stderr_fraction = base > 0.0 ? p.standard_error / base : 0.0;
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%d,%.17g,%.17g\n", p.edge,
                      p.area_fraction, p.power_fraction, p.runs, stderr_fraction, p.mean_power);
        out << line;
    }
}

void write_convergence_jsonl(std::ostream& out, std::span<const ConvergenceRun> runs) {
    out << nlohmann::ordered_json{{"schema", "windfarm.convergence"}, {"version", 1}}.dump() << '\n';
    for (const ConvergenceRun& run : runs) {
        for (const auto& [name, result] : {std::pair{"aga", &run.adapted}, std::pair{"ablated", &run.ablated}}) {
            for (const GenerationTrace& t : result->trace) {
                nlohmann::ordered_json line;
                line["seed"] = run.seed;
                line["algorithm"] = name;
                line["generation"] = t.generation;
                line["best_eta"] = t.best_efficiency;
                line["mean_eta"] = t.mean_efficiency;
                out << line.dump() << '\n';
            }
        }
    }
}

}  // namespace windfarm
