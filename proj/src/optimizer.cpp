#include "windfarm/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace windfarm {

namespace {

// Points of the map that are fixed, periodic with period two, or absorbing.
constexpr std::array<double, 3> kTrapPoints{0.75, 0.34549150281252629, 0.90450849718747373};

}  // namespace

bool is_valid_chaos_seed(double seed) {
    return seed > 0.0 && seed < 1.0 && seed != 0.25 && seed != 0.5 && seed != 0.75;
}

ChaosStream::ChaosStream(double seed) : state_(seed) {
    if (!is_valid_chaos_seed(seed)) {
        throw std::invalid_argument("chaos seed must lie in (0, 1) and avoid 0.25, 0.5, 0.75");
    }
}

double ChaosStream::next() {
    double x = 4.0 * state_ * (1.0 - state_);
    if (x < kGuard) {
        x += kNudge;
    } else if (x > 1.0 - kGuard) {
        x = std::min(x, 1.0) - kNudge;
    } else {
        for (double trap : kTrapPoints) {
            if (std::abs(x - trap) < kGuard) {
                x += kNudge;
                break;
            }
        }
    }
    state_ = x;
    return x;
}

double derive_seed(double base_seed, int k) {
    constexpr double golden = 0.61803398874989485;
    double s = base_seed + golden * k;
    s -= std::floor(s);
    while (!is_valid_chaos_seed(s)) {
        s = std::fmod(s + 1e-6, 1.0);
    }
    return s;
}

Index chaos_pick(ChaosStream& stream, Index count) {
    if (count < 1) {
        throw std::invalid_argument("chaos_pick: count must be >= 1");
    }
    const auto i = static_cast<Index>(std::floor(stream.next() * static_cast<double>(count)));
    return std::clamp<Index>(i, 0, count - 1);
}

Index chaos_position(ChaosStream& stream, Index candidates, const std::vector<bool>& excluded) {
    if (candidates < 1 || excluded.size() != static_cast<std::size_t>(candidates)) {
        throw std::invalid_argument("chaos_position: exclusion mask must cover every candidate");
    }
    const auto taken = [&](Index i) { return static_cast<bool>(excluded[static_cast<std::size_t>(i)]); };
    if (std::all_of(excluded.begin(), excluded.end(), [](bool b) { return b; })) {
        throw std::invalid_argument("chaos_position: every candidate is excluded");
    }
    Index draw = 0;
    for (Index attempt = 0; attempt < 10 * candidates; ++attempt) {
        const double scaled = stream.next() * static_cast<double>(candidates);
        draw = std::clamp<Index>(static_cast<Index>(std::floor(scaled + 0.5)), 0, candidates - 1);
        if (!taken(draw)) {
            return draw;
        }
    }
    for (Index step = 1; step <= candidates; ++step) {
        const Index i = (draw + step) % candidates;
        if (!taken(i)) {
            return i;
        }
    }
    throw std::logic_error("chaos_position: no free candidate");  // unreachable
}

Layout random_layout(ChaosStream& stream, Index candidates, Index turbines) {
    if (turbines < 0 || turbines > candidates) {
        throw std::invalid_argument("random_layout: need 0 <= N <= M (N = " +
                                    std::to_string(turbines) + ", M = " +
                                    std::to_string(candidates) + ")");
    }
    std::vector<bool> taken(static_cast<std::size_t>(candidates), false);
    std::vector<Index> occupied;
    occupied.reserve(static_cast<std::size_t>(turbines));
    for (Index k = 0; k < turbines; ++k) {
        const Index i = chaos_position(stream, candidates, taken);
        taken[static_cast<std::size_t>(i)] = true;
        occupied.push_back(i);
    }
    return Layout(std::move(occupied), candidates);
}

void validate(const GAParams& p) {
    const auto fail = [](const std::string& what) {
        throw std::invalid_argument("ga parameters: " + what);
    };
    if (p.elites < 1) fail("elites >= 1");
    if (p.relocations < 0 || p.aliens < 0) fail("relocations and aliens must be >= 0");
    if (p.elites + p.relocations + p.aliens > p.population) {
        fail("elites + relocations + aliens must not exceed population");
    }
    if (p.max_generations < 1) fail("max_generations >= 1");
    if (!is_valid_chaos_seed(p.chaos_seed)) fail("chaos seed must lie in (0, 1) and avoid 0.25, 0.5, 0.75");
    if (p.target_efficiency && !std::isfinite(*p.target_efficiency)) fail("target efficiency must be finite");
}

std::vector<Layout> initialize_population(const GAParams& params, Index candidates,
                                          Index turbines) {
    validate(params);
    if (turbines > candidates) {
        throw std::invalid_argument("initialize_population: more turbines than candidates");
    }
    ChaosStream stream(params.chaos_seed);
    std::vector<Layout> population;
    for (Index k = 0; k < params.population; ++k) {
        population.push_back(random_layout(stream, candidates, turbines));
    }
    return population;
}

Index worst_turbine(const Layout& layout, const EvaluationResult& evaluation) {
    if (layout.size() == 0 || evaluation.per_turbine_power.size() != layout.size()) {
        throw std::invalid_argument("worst_turbine: evaluation does not match the layout");
    }
    Index worst = 0;
    evaluation.per_turbine_power.minCoeff(&worst);  // first minimum, i.e. lowest index
    return layout.occupied()[static_cast<std::size_t>(worst)];
}

Index worst_turbine(const Layout& layout, const LayoutProblem& problem) {
    return worst_turbine(layout,
                         expected_farm_power(layout, problem.grid, problem.scenario, problem.spec));
}

Layout relocate_worst(const Layout& layout, Index worst, ChaosStream& stream) {
    if (layout.size() >= layout.candidate_count()) {
        return layout;
    }
    const Index target = chaos_position(stream, layout.candidate_count(), layout.mask());
    return layout.with_swap(worst, target);
}

Layout relocate_worst(const Layout& layout, const LayoutProblem& problem, ChaosStream& stream) {
    return relocate_worst(layout, worst_turbine(layout, problem), stream);
}

Layout mutate_twice(const Layout& layout, ChaosStream& stream) {
    if (layout.size() < 1 || layout.size() >= layout.candidate_count()) {
        throw std::invalid_argument("mutate_twice: requires 0 < N < M");
    }
    const Index removed = layout.occupied()[static_cast<std::size_t>(chaos_pick(stream, layout.size()))];
    // The cleared cell stays in the mask, so it cannot be re-selected.
    const Index added = chaos_position(stream, layout.candidate_count(), layout.mask());
    return layout.with_swap(removed, added);
}

std::optional<int> first_generation_reaching(const std::vector<GenerationTrace>& trace,
                                             double level) {
    for (const GenerationTrace& t : trace) {
        if (t.best_efficiency >= level - kEfficiencyTolerance) {
            return t.generation;
        }
    }
    return std::nullopt;
}

namespace {

enum class Descendants { relocation, random };

struct Individual {
    Layout layout;
    EvaluationResult evaluation;
};

OptimizationResult search(const LayoutProblem& problem, const GAParams& params,
                          Descendants descendants) {
    validate(params);
    validate(problem.spec);
    require_normalized(problem.scenario);
    const Index m = problem.grid.size();
    const Index n = problem.turbines;
    if (n < 1 || n > m) {
        throw std::invalid_argument("optimizer: need 1 <= turbines <= candidates (turbines = " +
                                    std::to_string(n) + ", candidates = " + std::to_string(m) + ")");
    }

    ChaosStream stream(params.chaos_seed);
    const auto evaluate = [&](Layout layout) {
        EvaluationResult e = expected_farm_power(layout, problem.grid, problem.scenario, problem.spec);
        return Individual{std::move(layout), std::move(e)};
    };

    std::vector<Individual> population;
    population.reserve(static_cast<std::size_t>(params.population));
    for (Index k = 0; k < params.population; ++k) {
        population.push_back(evaluate(random_layout(stream, m, n)));
    }

    OptimizationResult result;
    for (int generation = 1;; ++generation) {
        std::stable_sort(population.begin(), population.end(),
                         [](const Individual& a, const Individual& b) {
                             return a.evaluation.efficiency > b.evaluation.efficiency;
                         });
        double mean = 0.0;
        for (const Individual& ind : population) {
            mean += ind.evaluation.efficiency;
        }
        mean /= static_cast<double>(population.size());
        const Individual& best = population.front();
        result.trace.push_back({generation, best.evaluation.efficiency, mean, best.layout});

        if (params.target_efficiency &&
            best.evaluation.efficiency >= *params.target_efficiency - kEfficiencyTolerance) {
            result.reached_target = true;
            break;
        }
        if (generation >= params.max_generations) {
            break;
        }

        std::vector<Individual> next(population.begin(), population.begin() + params.elites);
        for (Index d = 0; d < params.relocations; ++d) {
            if (descendants == Descendants::relocation) {
                const Individual& parent = next[static_cast<std::size_t>(d % params.elites)];
                const Index worst = worst_turbine(parent.layout, parent.evaluation);
                next.push_back(evaluate(relocate_worst(parent.layout, worst, stream)));
            } else {
                next.push_back(evaluate(random_layout(stream, m, n)));
            }
        }
        for (Index a = 0; a < params.aliens; ++a) {
            next.push_back(evaluate(random_layout(stream, m, n)));
        }
        for (Index k = 0; k < params.mutants(); ++k) {
            const std::size_t parent =
                params.mutation_parent == MutationParent::best_only
                    ? 0
                    : static_cast<std::size_t>(chaos_pick(stream, params.elites));
            const Layout& source = next[parent].layout;
            next.push_back(n < m ? evaluate(mutate_twice(source, stream)) : next[parent]);
        }
        population = std::move(next);
    }

    result.best = population.front().layout;
    result.best_evaluation = population.front().evaluation;
    return result;
}

}  // namespace

OptimizationResult run_aga(const LayoutProblem& problem, const GAParams& params) {
    return search(problem, params, Descendants::relocation);
}

OptimizationResult run_conventional_ga(const LayoutProblem& problem, const GAParams& params) {
    return search(problem, params, Descendants::random);
}

void write_trace_jsonl(std::ostream& out, const std::vector<GenerationTrace>& trace) {
    out << nlohmann::ordered_json{{"schema", "windfarm.trace"}, {"version", 1}}.dump() << '\n';
    for (const GenerationTrace& t : trace) {
        nlohmann::ordered_json line;
        line["generation"] = t.generation;
        line["best_eta"] = t.best_efficiency;
        line["mean_eta"] = t.mean_efficiency;
        line["best_layout"] = t.best_layout.occupied();
        out << line.dump() << '\n';
    }
}

}  // namespace windfarm
