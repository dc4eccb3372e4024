// Run configuration: a small sectioned key = value format.
//
//   # comment
//   [grid]
//   side = 4000
//   cells = 20
//
// Lists are comma separated. The full key set is documented in README.md.
#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "windfarm/optimizer.hpp"
#include "windfarm/study.hpp"

namespace windfarm {

/// Parse or validation failure; carries the offending field and line.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string source, int line, std::string field, const std::string& message);

    const std::string& field() const { return field_; }
    int line() const { return line_; }

private:
    std::string field_;
    int line_;
};

enum class CasePreset { case1, case2, case3, case4, custom };
enum class WindKind { single, uniform, weibull };

struct RunConfig {
    CasePreset scenario = CasePreset::case1;

    double grid_side = 4000.0;
    int grid_cells = 20;
    Index turbines = 16;

    TurbineSpec turbine;

    WindKind wind_kind = WindKind::single;
    double wind_speed = 12.0;
    double wind_direction = 0.0;
    int sectors = 12;
    double weibull_shape = 2.1;
    double weibull_scale = 10.5;
    double speed_bin_width = 1.0;
    double speed_max = 30.0;
    std::vector<double> direction_weights;  // empty: uniform

    GAParams ga;

    UniformPattern uniform_pattern = UniformPattern::line;
    SpacingCheck spacing_check = SpacingCheck::off;
    std::vector<double> sweep_edges{200, 190, 180, 170, 160, 150, 140, 130, 120, 110, 100};
    int repeats = 5;
    double budget = 0.05;
    int compare_seeds = 10;
    Index cost_curve_max = 100;

    std::optional<std::filesystem::path> output_dir;
    std::optional<std::filesystem::path> layout_file;
};

/// Defaults for every field (the case 1 preset).
RunConfig default_config();

/// Throws ConfigError on syntax or validation errors.
RunConfig parse_config(std::string_view text, const std::string& source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

std::string_view to_string(CasePreset preset);

WindScenario make_scenario(const RunConfig& config);
LayoutProblem make_problem(const RunConfig& config);

}  // namespace windfarm
