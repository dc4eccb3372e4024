// Subcommand orchestration behind the `windfarm` executable.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "windfarm/config.hpp"

namespace windfarm {

enum class Command { optimize, evaluate, sweep, compare, verify, cost_curve };

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitRuntime = 2;
inline constexpr int kExitVerification = 3;

struct CliOptions {
    Command command = Command::optimize;
    std::optional<std::filesystem::path> config;
    std::optional<double> seed;
    std::optional<std::filesystem::path> out;
    std::optional<std::filesystem::path> layout;  // evaluate only
};

/// --out, then the config's run.output, then $WINDFARM_OUTPUT_DIR, then "out".
std::filesystem::path resolve_output_dir(const std::optional<std::filesystem::path>& cli_out,
                                         const RunConfig& config);

/// `# schema: windfarm.layout/1` followed by an `index,x,y` table.
void write_layout_csv(std::ostream& out, const Layout& layout, const Grid& grid);

/// Reads a file written by write_layout_csv. Indices must exist in @p grid and
/// coordinates must match them to 1e-6 m.
Layout read_layout_csv(std::istream& in, const Grid& grid);

/**
 * Loads the configuration, runs @p options.command and writes its files.
 * Progress goes to @p out; any failure is reported as a single line on @p err.
 * Returns one of the kExit* codes.
 */
int run(const CliOptions& options, std::ostream& out, std::ostream& err);

}  // namespace windfarm
