// windfarm: command-line front end.
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "windfarm/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Wind farm layout optimization with a chaos-driven adapted genetic algorithm"};
    app.require_subcommand(1);

    windfarm::CliOptions options;
    std::string config_path, out_dir, layout_path;
    double seed = 0.0;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "Configuration file");
        sub->add_option("--seed", seed, "Chaos seed x0 in (0, 1)");
        sub->add_option("--out", out_dir, "Output directory");
    };

    const std::pair<const char*, windfarm::Command> commands[] = {
        {"optimize", windfarm::Command::optimize}, {"evaluate", windfarm::Command::evaluate},
        {"sweep", windfarm::Command::sweep},       {"compare", windfarm::Command::compare},
        {"verify", windfarm::Command::verify},     {"cost-curve", windfarm::Command::cost_curve},
    };
    const char* help[] = {
        "Run the adapted GA and write layout, trace and summary",
        "Score a saved layout file",
        "Shrink the cell edge and re-optimize",
        "Uniform layout vs AGA, and AGA vs the ablated GA",
        "Run the oracle cross-checks",
        "Write the aggregate cost table C_tot(N)",
    };
    CLI::App* evaluate = nullptr;
    for (std::size_t i = 0; i < std::size(commands); ++i) {
        CLI::App* sub = app.add_subcommand(commands[i].first, help[i]);
        add_common(sub);
        const windfarm::Command command = commands[i].second;
        sub->callback([&options, command] { options.command = command; });
        if (command == windfarm::Command::evaluate) evaluate = sub;
    }
    evaluate->add_option("--layout", layout_path, "Layout CSV written by optimize");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : windfarm::kExitConfig;
    }

    for (CLI::App* sub : app.get_subcommands()) {
        if (sub->count("--config")) options.config = config_path;
        if (sub->count("--seed")) options.seed = seed;
        if (sub->count("--out")) options.out = out_dir;
        if (sub->get_name() == "evaluate" && sub->count("--layout")) options.layout = layout_path;
    }
    return windfarm::run(options, std::cout, std::cerr);
}
