#include "cli.hpp"

#include "tqmem/errors.hpp"
#include "tqmem/serialize.hpp"
#include "tqmem/sweep.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tqm::cli {

namespace {

struct SweepArgs {
    std::string preset;
    std::string env;
    double s = 0.0;
    double coupling = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double gamma0 = 1.0;
    double nsc = 1.0;
    double epsilon = 1.0;
    double t_max = 20.0;
    int steps = 400;
    std::string format = "csv";
    std::string out = "-";
};

// Starts from the preset (if any) and applies every flag that was given.
ExperimentConfig build_config(const CLI::App& cmd, const SweepArgs& args) {
    ExperimentConfig config;
    const bool has_preset = cmd.count("--preset") > 0;
    if (has_preset) {
        auto preset = find_preset(args.preset);
        if (!preset) {
            throw ConfigError("preset: unknown preset '" + args.preset +
                              "' (run `tqmem presets` for the list)");
        }
        config = *preset;
    } else {
        for (const char* flag : {"--env", "--s", "--coupling", "--c1", "--c2", "--c3"}) {
            if (cmd.count(flag) == 0) {
                throw ConfigError(std::string(flag + 2) + ": required unless --preset is given");
            }
        }
    }
    const auto given = [&](const char* flag) { return cmd.count(flag) > 0; };
    if (given("--env")) config.environment.kind = parse_environment_kind(args.env);
    if (given("--s")) config.environment.s = args.s;
    if (given("--coupling")) config.environment.coupling = args.coupling;
    if (given("--gamma0")) config.environment.gamma0 = args.gamma0;
    if (given("--nsc")) config.environment.n_sc = args.nsc;
    if (given("--epsilon")) config.environment.epsilon = args.epsilon;
    if (given("--c1")) config.initial_state.c1 = args.c1;
    if (given("--c2")) config.initial_state.c2 = args.c2;
    if (given("--c3")) config.initial_state.c3 = args.c3;
    if (given("--t-max")) config.t_max = args.t_max;
    if (given("--steps")) config.steps = args.steps;
    config.format = parse_output_format(args.format);
    config.output_path = args.out;
    config.validate();
    return config;
}

int run_sweep_command(const CLI::App& cmd, const SweepArgs& args, std::ostream& out) {
    const ExperimentConfig config = build_config(cmd, args);
    const std::string bytes = emit(run_sweep(config), config);
    if (config.output_path == "-") {
        out << bytes;
        out.flush();
    } else {
        write_output(bytes, config.output_path);
    }
    return kSuccess;
}

void list_presets(std::ostream& out) {
    for (const auto& p : presets()) {
        out << std::left << std::setw(16) << p.name << p.description << '\n';
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entropic uncertainty and secret-key-rate bounds for a decohering "
                 "topological quantum memory"};
    app.name("tqmem");
    app.require_subcommand(1);

    SweepArgs args;
    CLI::App* sweep = app.add_subcommand("sweep", "Evaluate all bounds on a uniform time grid");
    sweep->add_option("--preset", args.preset, "Named parameter set (see `tqmem presets`)");
    sweep->add_option("--env", args.env, "Environment: fermionic | bosonic");
    sweep->add_option("--s", args.s, "Ohmicity exponent s > 0");
    sweep->add_option("--coupling", args.coupling, "Coupling constant B");
    sweep->add_option("--c1", args.c1, "Bell-diagonal coefficient c1");
    sweep->add_option("--c2", args.c2, "Bell-diagonal coefficient c2");
    sweep->add_option("--c3", args.c3, "Bell-diagonal coefficient c3");
    sweep->add_option("--gamma0", args.gamma0, "Frequency cutoff (default 1)");
    sweep->add_option("--nsc", args.nsc, "Bosonic: CFT degrees of freedom N_sc (default 1)");
    sweep->add_option("--epsilon", args.epsilon, "Bosonic: UV length cutoff (default 1)");
    sweep->add_option("--t-max", args.t_max, "Final time in units of 1/gamma0 (default 20)");
    sweep->add_option("--steps", args.steps, "Number of grid points, >= 2 (default 400)");
    sweep->add_option("--format", args.format, "Output format: csv | json (default csv)");
    sweep->add_option("--out", args.out, "Output path, '-' for stdout (default -)");

    app.add_subcommand("presets", "List the built-in parameter sets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kValidationError;
    }

    try {
        if (app.got_subcommand("presets")) {
            list_presets(out);
            return kSuccess;
        }
        return run_sweep_command(*sweep, args, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalError;
    }
}

}  // namespace tqm::cli
