#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coldwave/cli_io.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw coldwave::ConfigError({"cannot read config file: " + path});
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodic pseudospectral solver for the cold-plasma model hierarchy"};
    app.require_subcommand(1);
    app.set_version_flag("--version", coldwave::version_string);

    std::string config_path, out_dir = ".";

    auto* run = app.add_subcommand("run", "Integrate one model from a config file");
    run->add_option("--config", config_path, "JSON run config")->required();
    run->add_option("--out", out_dir, "output directory");

    auto* sweep = app.add_subcommand("sweep", "Asymptotic-consistency eps sweep");
    sweep->add_option("--config", config_path, "JSON sweep config")->required();
    sweep->add_option("--out", out_dir, "output directory");

    auto* disp = app.add_subcommand("dispersion", "Measured vs analytic dispersion table");
    disp->add_option("--config", config_path, "JSON dispersion config")->required();

    double amplitude = 10.0;
    coldwave::BreakingProbeOptions opts;
    auto* probe = app.add_subcommand("breaking-probe", "Wave-breaking probe for the uni model");
    probe->add_option("--amplitude", amplitude, "initial-data amplitude a in h0 = -a sin x")
        ->required();
    probe->add_option("--out", out_dir, "output directory");
    probe->add_option("--n", opts.n_points, "grid points");
    probe->add_option("--dt", opts.dt, "time step");
    probe->add_option("--threshold", opts.threshold, "slope breakdown threshold");
    probe->add_option("--length", opts.length, "domain length");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return coldwave::run_command(coldwave::parse_config(slurp(config_path)), out_dir);
        if (sweep->parsed())
            return coldwave::sweep_command(coldwave::parse_sweep_config(slurp(config_path)),
                                           out_dir);
        if (disp->parsed())
            return coldwave::dispersion_command(
                coldwave::parse_dispersion_config(slurp(config_path)), std::cout);
        if (probe->parsed()) return coldwave::breaking_probe_command(amplitude, opts, out_dir);
    } catch (const coldwave::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return coldwave::exit_config_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
