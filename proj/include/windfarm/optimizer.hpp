// Adapted genetic algorithm for fixed-cardinality layouts, plus the
// conventional baseline (relocation replaced by random layouts) used for
// convergence comparisons.
#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "windfarm/layout.hpp"
#include "windfarm/power.hpp"
#include "windfarm/scenario.hpp"
#include "windfarm/turbine.hpp"

namespace windfarm {

/**
 * Logistic map x <- 4 x (1 - x), the only source of randomness in the
 * optimizer. States that land within 1e-12 of the absorbing end points, the
 * fixed point 3/4 or the period-two orbit are nudged by 1e-9.
 */
class ChaosStream {
public:
    static constexpr double kGuard = 1e-12;
    static constexpr double kNudge = 1e-9;

    /// Throws std::invalid_argument unless is_valid_chaos_seed(seed).
    explicit ChaosStream(double seed);

    double next();
    double state() const { return state_; }

private:
    double state_;
};

/// Seeds in (0, 1) other than 1/4, 1/2 and 3/4.
bool is_valid_chaos_seed(double seed);

/// Fractional part of seed + k * golden ratio, nudged off the forbidden
/// values; gives reproducible, well spread seeds for repeated runs.
double derive_seed(double base_seed, int k);

/// Index in [0, count) from floor(x * count).
Index chaos_pick(ChaosStream& stream, Index count);

/**
 * Candidate index round(x * M) clamped to [0, M - 1], redrawn while it is
 * marked in @p excluded. After 10 M rejected draws the free indices are
 * scanned upward from the last draw instead. Requires at least one free
 * index.
 */
Index chaos_position(ChaosStream& stream, Index candidates, const std::vector<bool>& excluded);

/// N distinct chaotic positions out of M.
Layout random_layout(ChaosStream& stream, Index candidates, Index turbines);

enum class MutationParent { best_only, elite_pool };

struct GAParams {
    Index population = 120;
    Index elites = 12;
    Index relocations = 36;
    Index aliens = 12;
    int max_generations = 200;
    /// Stop as soon as the best efficiency reaches this value.
    std::optional<double> target_efficiency;
    double chaos_seed = 0.37;
    MutationParent mutation_parent = MutationParent::elite_pool;

    Index mutants() const { return population - elites - relocations - aliens; }
};

void validate(const GAParams& params);

/// Everything that defines one placement problem.
struct LayoutProblem {
    Grid grid;
    Index turbines = 0;
    WindScenario scenario;
    TurbineSpec spec;
};

std::vector<Layout> initialize_population(const GAParams& params, Index candidates,
                                          Index turbines);

/// Occupied candidate index with the lowest expected power; ties go to the
/// lowest index.
Index worst_turbine(const Layout& layout, const EvaluationResult& evaluation);
Index worst_turbine(const Layout& layout, const LayoutProblem& problem);

/// Moves the turbine at @p worst to a fresh chaotic position. A full grid
/// is returned unchanged.
Layout relocate_worst(const Layout& layout, Index worst, ChaosStream& stream);
Layout relocate_worst(const Layout& layout, const LayoutProblem& problem, ChaosStream& stream);

/// Clears one occupied cell and sets one free cell (never the one just
/// cleared). Requires 0 < N < M.
Layout mutate_twice(const Layout& layout, ChaosStream& stream);

struct GenerationTrace {
    int generation = 0;
    double best_efficiency = 0.0;
    double mean_efficiency = 0.0;
    Layout best_layout;
};

struct OptimizationResult {
    Layout best;
    EvaluationResult best_evaluation;
    std::vector<GenerationTrace> trace;
    bool reached_target = false;
};

/// Tolerance used when comparing efficiencies against a target.
inline constexpr double kEfficiencyTolerance = 1e-12;

/// First generation whose best efficiency reaches @p level, if any.
std::optional<int> first_generation_reaching(const std::vector<GenerationTrace>& trace,
                                             double level);

OptimizationResult run_aga(const LayoutProblem& problem, const GAParams& params);

/// Same loop with the relocation descendants replaced by fresh chaotic
/// individuals.
OptimizationResult run_conventional_ga(const LayoutProblem& problem, const GAParams& params);

/// Schema line followed by one JSON object per generation.
void write_trace_jsonl(std::ostream& out, const std::vector<GenerationTrace>& trace);

}  // namespace windfarm
