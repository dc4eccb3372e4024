#include "windfarm/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace windfarm {

ConfigError::ConfigError(std::string source, int line, std::string field, const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " +
                         (field.empty() ? std::string() : field + ": ") + message),
      field_(std::move(field)),
      line_(line) {}

RunConfig default_config() {
    RunConfig c;
    c.ga.target_efficiency = 1.0;
    return c;
}

std::string_view to_string(CasePreset preset) {
    switch (preset) {
        case CasePreset::case1: return "case1";
        case CasePreset::case2: return "case2";
        case CasePreset::case3: return "case3";
        case CasePreset::case4: return "case4";
        case CasePreset::custom: return "custom";
    }
    return "custom";
}

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

struct Entry {
    std::string value;
    int line;
};

class Reader {
public:
    Reader(std::string source, std::map<std::string, Entry> entries)
        : source_(std::move(source)), entries_(std::move(entries)) {}

    [[noreturn]] void fail(const std::string& field, const std::string& message) const {
        const auto it = entries_.find(field);
        throw ConfigError(source_, it == entries_.end() ? 0 : it->second.line, field, message);
    }

    bool has(const std::string& field) const { return entries_.count(field) != 0; }

    template <typename T>
    void number(const std::string& field, T& out) const {
        const auto it = entries_.find(field);
        if (it == entries_.end()) return;
        out = parse_number<T>(field, it->second.value);
    }

    void numbers(const std::string& field, std::vector<double>& out) const {
        const auto it = entries_.find(field);
        if (it == entries_.end()) return;
        out.clear();
        std::stringstream ss(it->second.value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            out.push_back(parse_number<double>(field, trim(item)));
        }
    }

    template <typename E>
    void choice(const std::string& field, E& out, const std::vector<std::pair<std::string, E>>& options) const {
        const auto it = entries_.find(field);
        if (it == entries_.end()) return;
        std::string allowed;
        for (const auto& [name, value] : options) {
            if (name == it->second.value) {
                out = value;
                return;
            }
            allowed += (allowed.empty() ? "" : " | ") + name;
        }
        fail(field, "expected one of " + allowed + ", got '" + it->second.value + "'");
    }

    std::optional<std::string> text(const std::string& field) const {
        const auto it = entries_.find(field);
        if (it == entries_.end()) return std::nullopt;
        return it->second.value;
    }

private:
    template <typename T>
    T parse_number(const std::string& field, const std::string& raw) const {
        T value{};
        const char* begin = raw.data();
        const char* end = raw.data() + raw.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr != end || raw.empty()) {
            fail(field, "'" + raw + "' is not a valid number");
        }
        if constexpr (std::is_floating_point_v<T>) {
            if (!std::isfinite(value)) fail(field, "value must be finite");
        }
        return value;
    }

    std::string source_;
    std::map<std::string, Entry> entries_;
};

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys{
        "run.scenario", "run.seed", "run.output", "run.layout",
        "grid.side", "grid.cells", "grid.turbines",
        "turbine.rotor_radius", "turbine.hub_height", "turbine.thrust_coefficient",
        "turbine.surface_roughness", "turbine.rated_power", "turbine.cut_in",
        "turbine.rated_speed", "turbine.cut_out", "turbine.power_poly",
        "turbine.deficit_numerator",
        "wind.kind", "wind.speed", "wind.direction", "wind.sectors", "wind.weibull_shape",
        "wind.weibull_scale", "wind.speed_bin_width", "wind.speed_max",
        "wind.direction_weights",
        "ga.population", "ga.elites", "ga.relocations", "ga.aliens", "ga.max_generations",
        "ga.target_efficiency", "ga.mutation_parent",
        "study.edges", "study.repeats", "study.budget", "study.spacing_check",
        "study.uniform_pattern", "study.compare_seeds", "study.cost_curve_max",
    };
    return keys;
}

}  // namespace

RunConfig parse_config(std::string_view text, const std::string& source) {
    std::map<std::string, Entry> entries;
    std::string section;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (const auto hash = line.find_first_of("#;"); hash != std::string::npos) {
            line = trim(line.substr(0, hash));
        }
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                throw ConfigError(source, line_no, "", "malformed section header '" + line + "'");
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(source, line_no, "", "expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty()) {
            throw ConfigError(source, line_no, key, "key appears before any [section]");
        }
        const std::string field = section + "." + key;
        if (std::find(known_keys().begin(), known_keys().end(), field) == known_keys().end()) {
            throw ConfigError(source, line_no, field, "unknown key");
        }
        if (entries.count(field)) {
            throw ConfigError(source, line_no, field, "duplicate key");
        }
        if (value.empty()) {
            throw ConfigError(source, line_no, field, "missing value");
        }
        entries[field] = {value, line_no};
    }

    const Reader r(source, std::move(entries));
    RunConfig c = default_config();

    r.choice<CasePreset>("run.scenario", c.scenario,
                         {{"case1", CasePreset::case1}, {"case2", CasePreset::case2},
                          {"case3", CasePreset::case3}, {"case4", CasePreset::case4},
                          {"custom", CasePreset::custom}});
    switch (c.scenario) {
        case CasePreset::case1: c.wind_kind = WindKind::single, c.wind_speed = 12.0; break;
        case CasePreset::case2: c.wind_kind = WindKind::single, c.wind_speed = 20.0; break;
        case CasePreset::case3: c.wind_kind = WindKind::uniform, c.wind_speed = 12.0; break;
        case CasePreset::case4: c.wind_kind = WindKind::weibull; break;
        case CasePreset::custom:
            if (!r.has("wind.kind")) r.fail("wind.kind", "required when run.scenario = custom");
            break;
    }
    const bool single_speed_case =
        c.scenario == CasePreset::case1 || c.scenario == CasePreset::case2;
    c.ga.target_efficiency = single_speed_case ? std::optional<double>(1.0) : std::nullopt;

    r.number("run.seed", c.ga.chaos_seed);
    if (auto out = r.text("run.output")) c.output_dir = *out;
    if (auto layout = r.text("run.layout")) c.layout_file = *layout;

    r.number("grid.side", c.grid_side);
    r.number("grid.cells", c.grid_cells);
    r.number("grid.turbines", c.turbines);

    TurbineSpec& t = c.turbine;
    r.number("turbine.rotor_radius", t.rotor_radius);
    r.number("turbine.hub_height", t.hub_height);
    r.number("turbine.thrust_coefficient", t.thrust_coefficient);
    r.number("turbine.surface_roughness", t.surface_roughness);
    r.number("turbine.rated_power", t.power.rated_power);
    r.number("turbine.cut_in", t.power.cut_in);
    r.number("turbine.rated_speed", t.power.rated_speed);
    r.number("turbine.cut_out", t.power.cut_out);
    if (r.has("turbine.power_poly")) {
        std::vector<double> poly;
        r.numbers("turbine.power_poly", poly);
        if (poly.size() != 5) r.fail("turbine.power_poly", "expected 5 coefficients a4, a3, a2, a1, a0");
        std::copy(poly.begin(), poly.end(), t.power.poly.begin());
    }
    r.choice<DeficitNumerator>("turbine.deficit_numerator", t.deficit_numerator,
                               {{"standard", DeficitNumerator::standard},
                                {"paper_literal", DeficitNumerator::paper_literal}});

    r.choice<WindKind>("wind.kind", c.wind_kind,
                       {{"single", WindKind::single}, {"uniform", WindKind::uniform},
                        {"weibull", WindKind::weibull}});
    r.number("wind.speed", c.wind_speed);
    r.number("wind.direction", c.wind_direction);
    r.number("wind.sectors", c.sectors);
    r.number("wind.weibull_shape", c.weibull_shape);
    r.number("wind.weibull_scale", c.weibull_scale);
    r.number("wind.speed_bin_width", c.speed_bin_width);
    r.number("wind.speed_max", c.speed_max);
    r.numbers("wind.direction_weights", c.direction_weights);

    r.number("ga.population", c.ga.population);
    r.number("ga.elites", c.ga.elites);
    r.number("ga.relocations", c.ga.relocations);
    r.number("ga.aliens", c.ga.aliens);
    r.number("ga.max_generations", c.ga.max_generations);
    if (auto target = r.text("ga.target_efficiency")) {
        if (*target == "none" || *target == "off") {
            c.ga.target_efficiency.reset();
        } else {
            double v = 0.0;
            r.number("ga.target_efficiency", v);
            c.ga.target_efficiency = v;
        }
    }
    r.choice<MutationParent>("ga.mutation_parent", c.ga.mutation_parent,
                             {{"elite_pool", MutationParent::elite_pool},
                              {"best_only", MutationParent::best_only}});

    r.numbers("study.edges", c.sweep_edges);
    r.number("study.repeats", c.repeats);
    r.number("study.budget", c.budget);
    r.choice<SpacingCheck>("study.spacing_check", c.spacing_check,
                           {{"off", SpacingCheck::off}, {"strict", SpacingCheck::strict}});
    r.choice<UniformPattern>("study.uniform_pattern", c.uniform_pattern,
                             {{"line", UniformPattern::line},
                              {"square_lattice", UniformPattern::square_lattice}});
    r.number("study.compare_seeds", c.compare_seeds);
    r.number("study.cost_curve_max", c.cost_curve_max);

    // Validation, field by field.
    if (!(c.grid_side > 0.0)) r.fail("grid.side", "side > 0");
    if (c.grid_cells < 1) r.fail("grid.cells", "cells >= 1");
    const Index candidates = Index(c.grid_cells + 1) * (c.grid_cells + 1);
    if (c.turbines < 1 || c.turbines > candidates) {
        r.fail("grid.turbines", "1 <= turbines <= (cells + 1)^2 = " + std::to_string(candidates));
    }
    if (!(t.rotor_radius > 0.0)) r.fail("turbine.rotor_radius", "rotor_radius > 0");
    if (!(t.hub_height > t.rotor_radius)) r.fail("turbine.hub_height", "hub_height > rotor_radius");
    if (!(t.thrust_coefficient > 0.0 && t.thrust_coefficient < 1.0)) {
        r.fail("turbine.thrust_coefficient", "0 < thrust_coefficient < 1");
    }
    if (!(t.surface_roughness > 0.0 && t.surface_roughness < t.hub_height)) {
        r.fail("turbine.surface_roughness", "0 < surface_roughness < hub_height");
    }
    if (!(t.power.rated_power > 0.0)) r.fail("turbine.rated_power", "rated_power > 0");
    if (!(t.power.cut_in >= 0.0)) r.fail("turbine.cut_in", "cut_in >= 0");
    if (!(t.power.cut_in < t.power.rated_speed)) r.fail("turbine.rated_speed", "cut_in < rated_speed");
    if (!(t.power.rated_speed < t.power.cut_out)) r.fail("turbine.cut_out", "rated_speed < cut_out");

    if (!(c.wind_speed >= 0.0)) r.fail("wind.speed", "speed >= 0");
    if (c.sectors < 1) r.fail("wind.sectors", "sectors >= 1");
    if (!(c.weibull_shape > 0.0)) r.fail("wind.weibull_shape", "weibull_shape > 0");
    if (!(c.weibull_scale > 0.0)) r.fail("wind.weibull_scale", "weibull_scale > 0");
    if (!(c.speed_bin_width > 0.0)) r.fail("wind.speed_bin_width", "speed_bin_width > 0");
    if (!(c.speed_max >= c.speed_bin_width)) r.fail("wind.speed_max", "speed_max >= speed_bin_width");
    if (!c.direction_weights.empty()) {
        double total = 0.0;
        for (double w : c.direction_weights) {
            if (!(w >= 0.0)) r.fail("wind.direction_weights", "weights must be >= 0");
            total += w;
        }
        if (std::abs(total - 1.0) > kWeightTolerance) r.fail("wind.direction_weights", "weights must sum to 1");
    }

    if (c.ga.elites < 1) r.fail("ga.elites", "elites >= 1");
    if (c.ga.relocations < 0) r.fail("ga.relocations", "relocations >= 0");
    if (c.ga.aliens < 0) r.fail("ga.aliens", "aliens >= 0");
    if (c.ga.elites + c.ga.relocations + c.ga.aliens > c.ga.population) {
        r.fail("ga.population", "elites + relocations + aliens <= population");
    }
    if (c.ga.max_generations < 1) r.fail("ga.max_generations", "max_generations >= 1");
    if (!is_valid_chaos_seed(c.ga.chaos_seed)) {
        r.fail("run.seed", "seed in (0, 1), not 0.25, 0.5 or 0.75");
    }

    if (c.sweep_edges.empty()) r.fail("study.edges", "at least one edge");
    for (std::size_t i = 0; i < c.sweep_edges.size(); ++i) {
        if (!(c.sweep_edges[i] > 0.0) || (i > 0 && !(c.sweep_edges[i] < c.sweep_edges[i - 1]))) {
            r.fail("study.edges", "edges must be positive and strictly descending");
        }
    }
    if (c.repeats < 1) r.fail("study.repeats", "repeats >= 1");
    if (!(c.budget >= 0.0 && c.budget < 1.0)) r.fail("study.budget", "0 <= budget < 1");
    if (c.compare_seeds < 1) r.fail("study.compare_seeds", "compare_seeds >= 1");
    if (c.cost_curve_max < 1) r.fail("study.cost_curve_max", "cost_curve_max >= 1");
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(path.string(), 0, "", "cannot open config file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path.string());
}

WindScenario make_scenario(const RunConfig& c) {
    switch (c.wind_kind) {
        case WindKind::single:
            return single_bin(c.wind_direction, c.wind_speed);
        case WindKind::uniform:
            return uniform_directions(c.wind_speed, c.sectors);
        case WindKind::weibull: {
            WeibullRoseOptions o;
            o.shape = c.weibull_shape;
            o.scale = c.weibull_scale;
            const int bins = static_cast<int>(std::ceil(c.speed_max / c.speed_bin_width - 1e-9));
            for (int b = 0; b <= bins; ++b) {
                o.speed_edges.push_back(std::min(b * c.speed_bin_width, c.speed_max));
            }
            o.direction_weights = c.direction_weights.empty()
                                      ? std::vector<double>(static_cast<std::size_t>(c.sectors), 1.0 / c.sectors)
                                      : c.direction_weights;
            return weibull_rose(o);
        }
    }
    throw std::logic_error("make_scenario: unknown wind kind");
}

LayoutProblem make_problem(const RunConfig& c) {
    return LayoutProblem{build_grid(c.grid_side, c.grid_cells), c.turbines, make_scenario(c), c.turbine};
}

}  // namespace windfarm
