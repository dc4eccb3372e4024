// Experiment harness: area-shrinking sweep, cubic fit, power-drop budget,
// uniform baseline comparison and paired convergence runs.
#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "windfarm/optimizer.hpp"

namespace windfarm {

class SpacingInfeasible : public std::invalid_argument {
public:
    explicit SpacingInfeasible(const std::string& what) : std::invalid_argument(what) {}
};

enum class SpacingCheck { off, strict };

struct ShrinkSweepPoint {
    double edge = 0.0;            // m
    double area_fraction = 0.0;   // (edge / baseline edge)^2
    double mean_power = 0.0;      // kW, mean of the best power over runs
    double power_fraction = 0.0;  // mean_power / baseline mean_power
    int runs = 0;
    double standard_error = 0.0;  // kW
};

/**
 * Re-optimizes the base problem on grids with the same cell count and each
 * of @p edges (strictly descending, first entry is the baseline), running
 * the AGA @p repeats times per edge with seeds derive_seed(x0, r).
 *
 * Under SpacingCheck::strict an edge below one rotor diameter throws
 * SpacingInfeasible.
 */
std::vector<ShrinkSweepPoint> shrink_sweep(std::span<const double> edges,
                                           const LayoutProblem& base, const GAParams& params,
                                           int repeats, SpacingCheck spacing = SpacingCheck::off);

/// Least-squares cubic y = c0 + c1 x + c2 x^2 + c3 x^3.
struct PolyFit {
    int degree = 3;
    Eigen::Vector4d coefficients = Eigen::Vector4d::Zero();  // ascending powers of x
    double residual_norm = 0.0;

    // Fit is carried out in t = (x - center) / scale for conditioning.
    double center = 0.0;
    double scale = 1.0;
    Eigen::Vector4d scaled_coefficients = Eigen::Vector4d::Zero();

    double operator()(double x) const;
};

/// Needs at least four points and four distinct abscissae.
PolyFit fit_poly3(std::span<const double> x, std::span<const double> y);

struct BudgetResult {
    double edge = 0.0;
    double area_saving = 0.0;     // 1 - (edge / baseline edge)^2
    double predicted_drop = 0.0;  // 1 - fitted power fraction at edge
};

/**
 * Smallest edge reachable from the baseline whose fitted power drop stays
 * within @p budget. The search never passes a measured point that exceeds
 * the budget. With fewer than four points only measured points are used.
 */
BudgetResult power_drop_at_budget(std::span<const ShrinkSweepPoint> sweep, double budget);

struct UniformComparison {
    Layout uniform;
    EvaluationResult uniform_evaluation;
    OptimizationResult optimized;
};

UniformComparison compare_uniform_vs_aga(const LayoutProblem& problem, const GAParams& params,
                                         UniformPattern pattern = UniformPattern::line);

struct ConvergenceRun {
    double seed = 0.0;
    OptimizationResult adapted;
    OptimizationResult ablated;
};

std::vector<ConvergenceRun> convergence_comparison(const LayoutProblem& problem,
                                                   const GAParams& params,
                                                   std::span<const double> seeds);

void write_sweep_csv(std::ostream& out, std::span<const ShrinkSweepPoint> sweep);
void write_convergence_jsonl(std::ostream& out, std::span<const ConvergenceRun> runs);

}  // namespace windfarm
