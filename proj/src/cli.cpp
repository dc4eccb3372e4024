#include "windfarm/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "windfarm/oracle.hpp"

namespace windfarm {

namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

std::ofstream open_output(const fs::path& path) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return file;
}

void finish(std::ofstream& file, const fs::path& path) {
    file.flush();
    if (!file) {
        throw std::runtime_error("failed while writing " + path.string());
    }
}

ordered_json schema(const char* name) {
    return ordered_json{{"schema", name}, {"version", 1}};
}

void write_json(const fs::path& path, const ordered_json& doc) {
    std::ofstream file = open_output(path);
    file << doc.dump(2) << '\n';
    finish(file, path);
}

void write_layout(const fs::path& path, const Layout& layout, const Grid& grid) {
    std::ofstream file = open_output(path);
    write_layout_csv(file, layout, grid);
    finish(file, path);
}

std::string one_line(std::string text) {
    for (char& c : text) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    return text;
}

ordered_json describe(const EvaluationResult& e) {
    ordered_json j;
    j["efficiency"] = e.efficiency;
    j["expected_power_kw"] = e.expected_power;
    j["expected_power_mw"] = e.expected_power / 1000.0;
    j["wake_free_power_kw"] = e.wake_free_power;
    j["per_turbine_speed"] = std::vector<double>(e.per_turbine_speed.begin(), e.per_turbine_speed.end());
    j["per_turbine_power_kw"] = std::vector<double>(e.per_turbine_power.begin(), e.per_turbine_power.end());
    return j;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_optimize(const RunConfig& config, const fs::path& dir, std::ostream& out) {
    const LayoutProblem problem = make_problem(config);
    const auto start = std::chrono::steady_clock::now();
    const OptimizationResult result = run_aga(problem, config.ga);
    const double wall = seconds_since(start);

    write_layout(dir / "layout.csv", result.best, problem.grid);
    {
        const fs::path path = dir / "trace.jsonl";
        std::ofstream file = open_output(path);
        write_trace_jsonl(file, result.trace);
        finish(file, path);
    }
    ordered_json summary = schema("windfarm.summary");
    summary["scenario"] = std::string(to_string(config.scenario));
    summary["seed"] = config.ga.chaos_seed;
    summary["turbines"] = problem.turbines;
    summary["candidates"] = problem.grid.size();
    summary["efficiency"] = result.best_evaluation.efficiency;
    summary["total_power_kw"] = result.best_evaluation.expected_power;
    summary["total_power_mw"] = result.best_evaluation.expected_power / 1000.0;
    summary["generations"] = result.trace.size();
    summary["reached_target"] = result.reached_target;
    summary["wall_time_s"] = wall;
    write_json(dir / "summary.json", summary);

    char line[160];
    std::snprintf(line, sizeof line, "eta = %.6f  P_total = %.3f MW  generations = %zu  (%.2f s)\n",
                  result.best_evaluation.efficiency, result.best_evaluation.expected_power / 1000.0,
                  result.trace.size(), wall);
    out << line;
    return kExitOk;
}

int cmd_evaluate(const RunConfig& config, const std::optional<fs::path>& layout_arg,
                 const fs::path& dir, std::ostream& out) {
    const std::optional<fs::path> source = layout_arg ? layout_arg : config.layout_file;
    if (!source) {
        throw ConfigError("<cli>", 0, "run.layout", "evaluate needs --layout or run.layout");
    }
    const LayoutProblem problem = make_problem(config);
    std::ifstream in(*source);
    if (!in) {
        throw std::runtime_error("cannot open layout file " + source->string());
    }
    const Layout layout = read_layout_csv(in, problem.grid);
    const EvaluationResult e = expected_farm_power(layout, problem.grid, problem.scenario, problem.spec);

    ordered_json doc = schema("windfarm.evaluation");
    doc["layout_file"] = source->string();
    doc["turbines"] = layout.size();
    doc["layout"] = layout.occupied();
    doc.update(describe(e));
    write_json(dir / "evaluation.json", doc);

    char line[128];
    std::snprintf(line, sizeof line, "eta = %.12f  P_total = %.3f MW\n", e.efficiency, e.expected_power / 1000.0);
    out << line;
    return kExitOk;
}

int cmd_sweep(const RunConfig& config, const fs::path& dir, std::ostream& out) {
    const LayoutProblem problem = make_problem(config);
    const std::vector<ShrinkSweepPoint> sweep =
        shrink_sweep(config.sweep_edges, problem, config.ga, config.repeats, config.spacing_check);
    {
        const fs::path path = dir / "sweep.csv";
        std::ofstream file = open_output(path);
        write_sweep_csv(file, sweep);
        finish(file, path);
    }
    ordered_json doc = schema("windfarm.sweep_summary");
    doc["repeats"] = config.repeats;
    doc["budget"] = config.budget;
    if (sweep.size() >= 4) {
        std::vector<double> xs, ys;
        for (const ShrinkSweepPoint& p : sweep) {
            xs.push_back(p.edge);
            ys.push_back(p.power_fraction);
        }
        const PolyFit fit = fit_poly3(xs, ys);
        doc["fit"] = {{"degree", fit.degree},
                      {"coefficients", std::vector<double>(fit.coefficients.begin(), fit.coefficients.end())},
                      {"residual_norm", fit.residual_norm}};
    }
    try {
        const BudgetResult b = power_drop_at_budget(sweep, config.budget);
        doc["budget_result"] = {{"edge", b.edge}, {"area_saving", b.area_saving}, {"predicted_drop", b.predicted_drop}};
    } catch (const std::invalid_argument& e) {
        doc["budget_result"] = {{"error", e.what()}};
    }
    write_json(dir / "sweep_summary.json", doc);

    for (const ShrinkSweepPoint& p : sweep) {
        char line[128];
        std::snprintf(line, sizeof line, "edge %7.2f m  area %.4f  power %.6f\n", p.edge, p.area_fraction,
                      p.power_fraction);
        out << line;
    }
    return kExitOk;
}

int cmd_compare(const RunConfig& config, const fs::path& dir, std::ostream& out) {
    const LayoutProblem problem = make_problem(config);
    const UniformComparison uc = compare_uniform_vs_aga(problem, config.ga, config.uniform_pattern);
    std::vector<double> seeds;
    for (int k = 0; k < config.compare_seeds; ++k) {
        seeds.push_back(derive_seed(config.ga.chaos_seed, k));
    }
    const std::vector<ConvergenceRun> runs = convergence_comparison(problem, config.ga, seeds);

    write_layout(dir / "uniform_layout.csv", uc.uniform, problem.grid);
    write_layout(dir / "aga_layout.csv", uc.optimized.best, problem.grid);
    {
        const fs::path path = dir / "convergence.jsonl";
        std::ofstream file = open_output(path);
        write_convergence_jsonl(file, runs);
        finish(file, path);
    }
    ordered_json doc = schema("windfarm.compare");
    doc["uniform"] = {{"efficiency", uc.uniform_evaluation.efficiency},
                      {"total_power_kw", uc.uniform_evaluation.expected_power}};
    doc["aga"] = {{"efficiency", uc.optimized.best_evaluation.efficiency},
                  {"total_power_kw", uc.optimized.best_evaluation.expected_power},
                  {"generations", uc.optimized.trace.size()}};
    ordered_json paired = ordered_json::array();
    for (const ConvergenceRun& r : runs) {
        const double level = config.ga.target_efficiency.value_or(1.0);
        const auto gen = [&](const OptimizationResult& res) -> ordered_json {
            const auto g = first_generation_reaching(res.trace, level);
            return g ? ordered_json(*g) : ordered_json(nullptr);
        };
        paired.push_back({{"seed", r.seed},
                          {"aga_best_eta", r.adapted.best_evaluation.efficiency},
                          {"ablated_best_eta", r.ablated.best_evaluation.efficiency},
                          {"aga_generations_to_target", gen(r.adapted)},
                          {"ablated_generations_to_target", gen(r.ablated)}});
    }
    doc["paired_runs"] = paired;
    write_json(dir / "compare.json", doc);

    char line[160];
    std::snprintf(line, sizeof line, "uniform eta = %.6f  aga eta = %.6f  paired seeds = %zu\n",
                  uc.uniform_evaluation.efficiency, uc.optimized.best_evaluation.efficiency, runs.size());
    out << line;
    return kExitOk;
}

int cmd_verify(const RunConfig& config, const fs::path& dir, std::ostream& out) {
    const LayoutProblem problem = make_problem(config);
    const std::vector<CheckResult> checks = run_oracle_suite(problem, config.ga);
    ordered_json doc = schema("windfarm.verify");
    ordered_json list = ordered_json::array();
    bool all = true;
    for (const CheckResult& c : checks) {
        all = all && c.passed;
        list.push_back({{"name", c.name},
                        {"passed", c.passed},
                        {"max_deviation", c.max_deviation},
                        {"tolerance", c.tolerance}});
        char line[160];
        std::snprintf(line, sizeof line, "%s %s max_deviation=%.3g tolerance=%.3g\n",
                      c.passed ? "PASS" : "FAIL", c.name.c_str(), c.max_deviation, c.tolerance);
        out << line;
    }
    doc["checks"] = list;
    doc["passed"] = all;
    write_json(dir / "verify.json", doc);
    return all ? kExitOk : kExitVerification;
}

int cmd_cost_curve(const RunConfig& config, const fs::path& dir, std::ostream& out) {
    const fs::path path = dir / "cost_curve.csv";
    std::ofstream file = open_output(path);
    file << "# schema: windfarm.cost_curve/1\n";
    file << "n,cost_total,cost_per_turbine\n";
    char line[96];
    for (Index n = 1; n <= config.cost_curve_max; ++n) {
        const double c = cost_curve(n);
        std::snprintf(line, sizeof line, "%lld,%.17g,%.17g\n", static_cast<long long>(n), c,
                      c / static_cast<double>(n));
        file << line;
    }
    finish(file, path);
    out << "wrote " << path.string() << '\n';
    return kExitOk;
}

}  // namespace

fs::path resolve_output_dir(const std::optional<fs::path>& cli_out, const RunConfig& config) {
    if (cli_out) return *cli_out;
    if (config.output_dir) return *config.output_dir;
    if (const char* env = std::getenv("WINDFARM_OUTPUT_DIR"); env != nullptr && *env != '\0') {
        return fs::path(env);
    }
    return fs::path("out");
}

void write_layout_csv(std::ostream& out, const Layout& layout, const Grid& grid) {
    if (layout.candidate_count() != grid.size()) {
        throw std::invalid_argument("write_layout_csv: layout does not belong to this grid");
    }
    out << "# schema: windfarm.layout/1\n";
    out << "index,x,y\n";
    char line[96];
    for (Index i : layout.occupied()) {
        std::snprintf(line, sizeof line, "%lld,%.17g,%.17g\n", static_cast<long long>(i),
                      grid.points(0, i), grid.points(1, i));
        out << line;
    }
}

Layout read_layout_csv(std::istream& in, const Grid& grid) {
    std::string line;
    int line_no = 0;
    bool header = false;
    std::vector<Index> indices;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!header) {
            if (line != "index,x,y") {
                throw std::invalid_argument("layout line " + std::to_string(line_no) +
                                            ": expected header 'index,x,y'");
            }
            header = true;
            continue;
        }
        long long index = 0;
        double x = 0.0, y = 0.0;
        char tail = 0;
        if (std::sscanf(line.c_str(), "%lld,%lf,%lf%c", &index, &x, &y, &tail) != 3) {
            throw std::invalid_argument("layout line " + std::to_string(line_no) + ": expected index,x,y");
        }
        if (index < 0 || index >= grid.size()) {
            throw std::invalid_argument("layout line " + std::to_string(line_no) + ": index " +
                                        std::to_string(index) + " is outside the grid");
        }
        if (std::abs(grid.points(0, index) - x) > 1e-6 || std::abs(grid.points(1, index) - y) > 1e-6) {
            throw std::invalid_argument("layout line " + std::to_string(line_no) +
                                        ": coordinates do not match candidate " + std::to_string(index));
        }
        indices.push_back(static_cast<Index>(index));
    }
    if (!header) {
        throw std::invalid_argument("layout file has no 'index,x,y' header");
    }
    return Layout(std::move(indices), grid.size());
}

int run(const CliOptions& options, std::ostream& out, std::ostream& err) {
    RunConfig config;
    fs::path dir;
    try {
        config = options.config ? load_config(*options.config) : default_config();
        if (options.seed) {
            if (!is_valid_chaos_seed(*options.seed)) {
                throw ConfigError("<cli>", 0, "--seed", "seed in (0, 1), not 0.25, 0.5 or 0.75");
            }
            config.ga.chaos_seed = *options.seed;
        }
        dir = resolve_output_dir(options.out, config);
    } catch (const std::exception& e) {
        err << "windfarm: config error: " << one_line(e.what()) << '\n';
        return kExitConfig;
    }

    try {
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) {
            throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
        }
        switch (options.command) {
            case Command::optimize: return cmd_optimize(config, dir, out);
            case Command::evaluate: return cmd_evaluate(config, options.layout, dir, out);
            case Command::sweep: return cmd_sweep(config, dir, out);
            case Command::compare: return cmd_compare(config, dir, out);
            case Command::verify: return cmd_verify(config, dir, out);
            case Command::cost_curve: return cmd_cost_curve(config, dir, out);
        }
        throw std::logic_error("unknown command");
    } catch (const ConfigError& e) {
        err << "windfarm: config error: " << one_line(e.what()) << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "windfarm: runtime error: " << one_line(e.what()) << '\n';
        return kExitRuntime;
    }
}

}  // namespace windfarm
