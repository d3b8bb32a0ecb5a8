#include <optional>
#include <string>

#include <CLI11.hpp>

#include "entloc/cli.hpp"

// Command-line front end: reproduces the figure data as CSV/JSON and runs
// single-point reports, angle optimizations, sudden-death thresholds and
// DDS/ADS comparisons. All angles are radians unless --degrees is given.

namespace {

void add_common_flags(CLI::App *cmd, entloc::cli::RunConfig &config) {
    cmd->add_option("-o,--output", config.output, "Output file (default stdout)");
    cmd->add_option("--format", config.format, "Output format: csv, json or text");
    cmd->add_option("--precision", config.precision,
                    "Decimal digits in emitted numbers (default 12)");
    cmd->add_flag("--degrees", config.degrees, "Interpret angle flags as degrees");
}

void add_param_flags(CLI::App *cmd, entloc::cli::RunConfig &config) {
    cmd->add_option("--d", config.d, "Decoherence strength for all qubits");
    cmd->add_option("--d1", config.d1, "Decoherence strength of qubit 1");
    cmd->add_option("--d2", config.d2, "Decoherence strength of qubit 2");
    cmd->add_option("--d3", config.d3, "Decoherence strength of qubit 3");
    cmd->add_option("--theta", config.theta, "Measurement angle (default pi/2)");
}

} // namespace

int main(int argc, char **argv) {
    entloc::cli::RunConfig config;

    CLI::App app{"Entanglement localization toolkit for noisy GHZ states"};
    app.require_subcommand(1);

    auto *localize = app.add_subcommand(
        "localize", "Measure qubit 3 of the noisy GHZ state and report both outcomes");
    add_param_flags(localize, config);
    localize->add_option("--phi", config.phi, "Measurement phase (default 0)");
    localize->add_option("--model", config.model, "Noise model: amp or depol");
    add_common_flags(localize, config);

    auto *figure = app.add_subcommand("figure", "Emit grid data for one figure");
    figure->add_option("id", config.figure_id, "Figure id: 2, 3, 4, 5, 7 or 8")
        ->required();
    figure->add_option("--grid-points", config.grid_points,
                       "Points per axis (default 201)");
    figure->add_option("--theta-prime", config.theta_prime,
                       "Fixed measurement angle for figure 8 (default 1.5)");
    add_common_flags(figure, config);

    auto *optimize = app.add_subcommand(
        "optimize", "Find the measurement angle maximizing an objective");
    optimize->add_option("--objective", config.objective,
                         "n+, n-, nave, f+, f-, fave or depol");
    add_param_flags(optimize, config);
    optimize->add_option("--grid-points", config.grid_points,
                         "Coarse scan points (default 2001)");
    add_common_flags(optimize, config);

    auto *threshold = app.add_subcommand(
        "threshold", "Bisect the decoherence strength where an objective dies");
    threshold->add_option("--objective", config.objective,
                          "n+, n-, nave, f+, f-, fave or depol");
    threshold->add_option("--theta", config.theta,
                          "Measurement angle (default pi/2)");
    add_common_flags(threshold, config);

    auto *compare = app.add_subcommand(
        "compare", "Compare direct and ancilla-assisted distribution at one point");
    add_param_flags(compare, config);
    add_common_flags(compare, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return entloc::cli::kExitUsage;
    }

    config.subcommand = app.get_subcommands().front()->get_name();
    return entloc::cli::run(config);
}
