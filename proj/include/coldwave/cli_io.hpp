#ifndef COLDWAVE_CLI_IO_HPP
#define COLDWAVE_CLI_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "coldwave/diagnostics.hpp"
#include "coldwave/experiments.hpp"

namespace coldwave {

inline constexpr const char* version_string = "0.1.0";

// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,
    exit_config_error = 2,
    exit_breakdown_slope = 3,
    exit_breakdown_nonfinite = 4,
    exit_elliptic_failure = 5,
};

struct ProfileSpec {
    enum class Kind { sine, cosine, trig_sum, steep_sine, snapshot };
    struct Term {
        double amplitude;
        int mode;
        double phase;
    };
    Kind kind = Kind::sine;
    double amplitude = 0.0;
    int mode = 1;
    std::vector<Term> terms;   // trig_sum: sum of a sin(kx + phase)
    std::string path, field;   // snapshot reload

    int max_mode() const;      // snapshot profiles report 0; they are dealiased on load
    double mean() const;       // snapshot means are checked at run time
    Field build(const PeriodicGrid& grid) const;
};

/// Reads one field column back from an emitted snapshot file.
Field load_snapshot_field(const std::filesystem::path& path, const PeriodicGrid& grid,
                          const std::string& field_name);

struct GridSpec {
    int n_points = 256;
    double length = two_pi;
};

struct OutputSpec {
    bool emit_timeseries = true;
    bool emit_snapshots = false;
    bool emit_plot_columns = false;
};

struct RunConfig {
    ModelKind model = ModelKind::uni;
    GridSpec grid;
    StepperConfig stepping;
    std::map<std::string, ProfileSpec> initial_fields;  // by field name (N,U / h,v / h,g / h)
    bool mean_zero_project = true;
    EllipticSolveParams elliptic;
    OutputSpec outputs;
    std::string echo;  // normalized JSON echo for the manifest
};

struct SweepConfig {
    ReducedModel model = ReducedModel::boussinesq;
    ProfileSpec profile;
    std::vector<double> eps_list;
    double t_cmp = 1.0;
    GridSpec grid;
    double dt = 1e-3;
    std::string echo;
};

struct DispersionConfig {
    WaveModel model = WaveModel::biwave;
    std::vector<int> modes;
    double amplitude = 1e-5;
    GridSpec grid;
    double dt = 1e-3;
};

/// Parses and validates; throws ConfigError listing every violation.
RunConfig parse_config(const std::string& text);
SweepConfig parse_sweep_config(const std::string& text);
DispersionConfig parse_dispersion_config(const std::string& text);

/// Runs one model, writing manifest.json, timeseries.csv and optional
/// snapshots under out_dir.  Returns an ExitCode.
int run_command(const RunConfig& cfg, const std::filesystem::path& out_dir);

/// Runs an eps sweep, writing consistency_report.json plus one manifest
/// per cell.  Partial failures are recorded per cell, never dropped.
int sweep_command(const SweepConfig& cfg, const std::filesystem::path& out_dir);

/// Prints one whitespace-separated row per mode:
/// k omega_analytic omega_measured abs_err [flag].
int dispersion_command(const DispersionConfig& cfg, std::ostream& out);

struct BreakingProbeOptions {
    int n_points = 1024;
    double length = two_pi;
    double dt = 1e-5;
    double threshold = -1e3;
};

/// Runs the wave-breaking probe, writing breaking_report.json and
/// slope_trace.csv under out_dir.
int breaking_probe_command(double amplitude, const BreakingProbeOptions& opts,
                           const std::filesystem::path& out_dir);

}  // namespace coldwave

#endif
