// spinflip: spin-flip lifetimes of a trapped atom above a conducting slab.
//
// Subcommands:
//   rate      one scenario, full and/or asymptotic method
//   sweep     temperature / distance / frequency sweep, CSV or JSON
//   validate  asymptotic-vs-quadrature deviation over a (T, z) grid
//   presets   list the built-in materials
//
// Exit codes: 0 success, 1 validate tolerance exceeded, 2 configuration
// error, 3 quadrature failure.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_app.hpp"

namespace {

using spinflip::cli::RunConfig;

/// Pre-scan for --config so file values become the defaults that explicit
/// flags then override.
std::string find_config_path(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) return argv[i + 1];
        if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
    }
    return {};
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--config", "flat JSON config file; flags override file values")
        ->type_name("PATH");
    cmd->add_option("--material", cfg.material, "material preset name, or 'custom'");
    cmd->add_option("--kind", cfg.kind, "custom material kind: superconductor|normal|perfect");
    auto opt = [cmd](const char* flag, std::optional<double>& target, const char* desc) {
        cmd->add_option_function<double>(
            flag, [&target](double v) { target = v; }, desc);
    };
    opt("--lambda-l0-nm", cfg.lambda_l0_nm, "custom superconductor London length [nm]");
    opt("--sigma", cfg.sigma, "custom conductivity [S/m]");
    opt("--tc", cfg.tc_k, "custom superconductor T_c [K]");
    opt("--gc-exponent", cfg.gc_exponent, "custom Gorter-Casimir exponent");
    opt("--gap-freq", cfg.gap_freq_rad_s, "custom gap frequency [rad/s]");
    opt("--delta-um", cfg.delta_um, "custom normal-metal skin depth [um]");
    opt("--delta-ref-khz", cfg.delta_ref_khz, "reference frequency for --delta-um [kHz]");
    cmd->add_option("--temperature", cfg.temperature_k, "slab temperature [K]");
    cmd->add_option("--distance-um", cfg.distance_um, "atom-surface distance [um]");
    cmd->add_option("--frequency-khz", cfg.frequency_khz, "transition frequency [kHz]");
    cmd->add_option("--spin-weight-par", cfg.spin_weight_parallel, "parallel spin weight");
    cmd->add_option("--spin-weight-perp", cfg.spin_weight_perp, "perpendicular spin weight");
    cmd->add_option("--method", cfg.method, "full | asymptotic | both");
    cmd->add_option("--output", cfg.output, "text | csv | json");
    cmd->add_option_function<std::string>(
        "--out", [&cfg](std::string v) { cfg.out_path = std::move(v); }, "output file path");
    cmd->add_option("--rel-tol", cfg.quad.rel_tol, "quadrature relative tolerance");
    cmd->add_option("--abs-tol", cfg.quad.abs_tol, "quadrature absolute floor");
    cmd->add_option("--max-subdivisions", cfg.quad.max_subdivisions,
                    "quadrature panel-split budget");
    cmd->add_option("--tail-cutoff", cfg.quad.tail_exponent_cutoff,
                    "evanescent tail truncation exponent");
    cmd->add_flag("--audit", cfg.audit, "re-verify rate identities on every row");
    cmd->add_flag("--meta", cfg.meta, "emit a provenance header line");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    const std::string config_path = find_config_path(argc, argv);
    if (!config_path.empty()) {
        try {
            cfg = spinflip::cli::load_config_file(config_path);
        } catch (const std::exception& e) {
            std::fprintf(stderr, "config error: %s\n", e.what());
            return spinflip::cli::kExitConfigError;
        }
    }

    CLI::App app{"magnetic spin-flip rates near a conducting half-space"};
    app.require_subcommand(1);

    CLI::App* rate = app.add_subcommand("rate", "evaluate one scenario");
    add_common_options(rate, cfg);

    CLI::App* sweep = app.add_subcommand("sweep", "sweep one axis");
    add_common_options(sweep, cfg);
    std::string sweep_axis, sweep_scale;
    double sweep_start = 0.0, sweep_stop = 0.0;
    int sweep_points = 0;
    sweep->add_option("--sweep-axis", sweep_axis, "temperature | distance | frequency");
    sweep->add_option("--sweep-start", sweep_start, "axis start (K, um or kHz)");
    sweep->add_option("--sweep-stop", sweep_stop, "axis stop (K, um or kHz)");
    sweep->add_option("--sweep-points", sweep_points, "number of points (>= 2)");
    sweep->add_option("--sweep-scale", sweep_scale, "linear | log");

    CLI::App* validate = app.add_subcommand("validate", "asymptotic vs quadrature grid");
    add_common_options(validate, cfg);
    validate->add_option("--tolerance", cfg.tolerance, "max allowed relative deviation");
    validate->add_option("--t-min", cfg.t_min, "grid temperature start [K]");
    validate->add_option("--t-max", cfg.t_max, "grid temperature stop [K]");
    validate->add_option("--t-points", cfg.t_points, "temperature points");
    validate->add_option("--z-min-um", cfg.z_min_um, "grid distance start [um]");
    validate->add_option("--z-max-um", cfg.z_max_um, "grid distance stop [um]");
    validate->add_option("--z-points", cfg.z_points, "distance points");

    CLI::App* presets = app.add_subcommand("presets", "list material presets");
    presets->add_option("--output", cfg.output, "text | json");
    presets->add_option_function<std::string>(
        "--out", [&cfg](std::string v) { cfg.out_path = std::move(v); }, "output file path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : spinflip::cli::kExitConfigError;
    }

    try {
        if (sweep->parsed()) {
            if (sweep->count("--sweep-axis") > 0 || !cfg.sweep) {
                spinflip::cli::SweepSpec spec;
                if (cfg.sweep) spec = *cfg.sweep;
                if (sweep->count("--sweep-axis"))
                    spec.axis = spinflip::cli::axis_from_name(sweep_axis);
                if (sweep->count("--sweep-start")) spec.start = sweep_start;
                if (sweep->count("--sweep-stop")) spec.stop = sweep_stop;
                if (sweep->count("--sweep-points")) spec.points = sweep_points;
                if (sweep->count("--sweep-scale")) {
                    if (sweep_scale != "linear" && sweep_scale != "log")
                        throw spinflip::cli::ConfigError("sweep_scale must be linear or log");
                    spec.log_scale = sweep_scale == "log";
                }
                cfg.sweep = spec;
            } else {
                if (sweep->count("--sweep-start")) cfg.sweep->start = sweep_start;
                if (sweep->count("--sweep-stop")) cfg.sweep->stop = sweep_stop;
                if (sweep->count("--sweep-points")) cfg.sweep->points = sweep_points;
                if (sweep->count("--sweep-scale")) cfg.sweep->log_scale = sweep_scale == "log";
            }
            return spinflip::cli::cmd_sweep(cfg);
        }
        if (rate->parsed()) {
            cfg.sweep.reset();
            return spinflip::cli::cmd_rate(cfg);
        }
        if (validate->parsed()) return spinflip::cli::cmd_validate(cfg);
        if (presets->parsed()) return spinflip::cli::cmd_presets(cfg);
    } catch (const spinflip::cli::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return spinflip::cli::kExitConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return spinflip::cli::kExitConfigError;
    }
    return spinflip::cli::kExitConfigError;
}
