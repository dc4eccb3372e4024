// Brute-force verifiers kept deliberately naive: Monte Carlo overlap,
// straight-line farm evaluation and exhaustive small-instance search.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "windfarm/optimizer.hpp"

namespace windfarm {

struct OverlapEstimate {
    double area = 0.0;
    double standard_error = 0.0;
};

/// Rejection-samples the rotor disc and counts hits inside the wake disc.
/// Requires samples >= 10^4.
OverlapEstimate mc_overlap(double wake_radius, double rotor_radius, double lateral_offset,
                           std::int64_t samples, std::uint64_t rng_seed = 0x5eed);

/// Double loop over turbine pairs for every bin; shares only the geometry
/// primitives with the main evaluator.
EvaluationResult straight_line_eval(const Points& positions, const WindScenario& scenario,
                                    const TurbineSpec& spec);

inline constexpr double kExhaustiveCap = 1e6;

struct ExhaustiveResult {
    Layout layout;
    double efficiency = 0.0;
    std::int64_t evaluated = 0;
};

/// Best layout over every N-subset of the grid; the first subset in
/// lexicographic order wins ties. Rejects instances above kExhaustiveCap.
ExhaustiveResult exhaustive_best(const Grid& grid, Index turbines, const WindScenario& scenario,
                                 const TurbineSpec& spec);

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_deviation = 0.0;
    double tolerance = 0.0;
};

/// The checks behind the `verify` subcommand, driven by @p problem and
/// seeded from params.chaos_seed.
std::vector<CheckResult> run_oracle_suite(const LayoutProblem& problem, const GAParams& params);

}  // namespace windfarm
