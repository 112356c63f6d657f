#include "coldwave/cli_io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace coldwave {

using nlohmann::json;

namespace {

std::string status_name(StepStatus s) {
    switch (s) {
        case StepStatus::ok: return "ok";
        case StepStatus::breakdown_nonfinite: return "breakdown_nonfinite";
        case StepStatus::breakdown_slope: return "breakdown_slope";
    }
    return "unknown";
}

int status_exit(StepStatus s) {
    switch (s) {
        case StepStatus::ok: return exit_ok;
        case StepStatus::breakdown_slope: return exit_breakdown_slope;
        case StepStatus::breakdown_nonfinite: return exit_breakdown_nonfinite;
    }
    return exit_ok;
}

const std::map<std::string, ModelKind> model_names = {
    {"full", ModelKind::full},
    {"boussinesq", ModelKind::boussinesq},
    {"biwave", ModelKind::biwave},
    {"uni", ModelKind::uni},
};

std::string model_name(ModelKind m) {
    for (const auto& [k, v] : model_names)
        if (v == m) return k;
    return "?";
}

std::vector<std::string> field_names(ModelKind m) {
    switch (m) {
        case ModelKind::full: return {"N", "U"};
        case ModelKind::boussinesq: return {"h", "v"};
        case ModelKind::biwave: return {"h", "g"};
        case ModelKind::uni: return {"h"};
    }
    return {};
}

}  // namespace

int ProfileSpec::max_mode() const {
    if (kind == Kind::trig_sum) {
        int m = 0;
        for (const auto& t : terms) m = std::max(m, std::abs(t.mode));
        return m;
    }
    if (kind == Kind::steep_sine) return 1;
    if (kind == Kind::snapshot) return 0;
    return std::abs(mode);
}

double ProfileSpec::mean() const {
    double m = 0.0;
    switch (kind) {
        case Kind::sine:
        case Kind::steep_sine:
        case Kind::snapshot: break;  // sin(kx) has zero mean; snapshots checked on load
        case Kind::cosine:
            if (mode == 0) m = amplitude;
            break;
        case Kind::trig_sum:
            for (const auto& t : terms)
                if (t.mode == 0) m += t.amplitude * std::sin(t.phase);
            break;
    }
    return m;
}

// Profile modes are integer grid-mode indices: mode j samples at
// wavenumber 2 pi j / length.
Field ProfileSpec::build(const PeriodicGrid& grid) const {
    switch (kind) {
        case Kind::sine: {
            const double k = grid.wavenumber(mode);
            return Field::sample(grid, [&](double x) { return amplitude * std::sin(k * x); });
        }
        case Kind::cosine: {
            const double k = grid.wavenumber(mode);
            return Field::sample(grid, [&](double x) { return amplitude * std::cos(k * x); });
        }
        case Kind::steep_sine: {
            const double k = grid.wavenumber(1);
            return Field::sample(grid, [&](double x) { return -amplitude * std::sin(k * x); });
        }
        case Kind::trig_sum:
            return Field::sample(grid, [&](double x) {
                double v = 0.0;
                for (const auto& t : terms)
                    v += t.amplitude * std::sin(grid.wavenumber(t.mode) * x + t.phase);
                return v;
            });
        case Kind::snapshot:
            return load_snapshot_field(path, grid, field);
    }
    throw std::logic_error("ProfileSpec: unknown kind");
}

Field load_snapshot_field(const std::filesystem::path& path, const PeriodicGrid& grid,
                          const std::string& field_name) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot read snapshot file: " + path.string()});
    std::string line;
    std::getline(in, line);  // "t <value>"
    std::getline(in, line);  // "x <name> ..."
    std::istringstream header(line);
    std::string tok;
    header >> tok;
    int column = -1;
    for (int idx = 0; header >> tok; ++idx)
        if (tok == field_name) column = idx;
    if (column < 0)
        throw ConfigError({"snapshot " + path.string() + " has no field '" + field_name + "'"});

    std::vector<double> samples;
    samples.reserve(grid.n());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        double v = 0.0;
        for (int idx = -1; idx <= column; ++idx) row >> v;
        samples.push_back(v);
    }
    if (static_cast<int>(samples.size()) != grid.n())
        throw ConfigError({"snapshot " + path.string() + " has " +
                           std::to_string(samples.size()) + " rows, grid needs " +
                           std::to_string(grid.n())});
    return dealias(Field(grid, std::move(samples)));
}

namespace {

ProfileSpec parse_profile(const json& j, const std::string& where,
                          std::vector<std::string>& issues) {
    ProfileSpec p;
    const std::string kind = j.value("profile", "");
    if (kind == "sine") p.kind = ProfileSpec::Kind::sine;
    else if (kind == "cosine") p.kind = ProfileSpec::Kind::cosine;
    else if (kind == "steep_sine") p.kind = ProfileSpec::Kind::steep_sine;
    else if (kind == "trig_sum") p.kind = ProfileSpec::Kind::trig_sum;
    else if (kind == "snapshot") p.kind = ProfileSpec::Kind::snapshot;
    else {
        issues.push_back(where + ": unknown profile '" + kind +
                         "' (expected sine|cosine|trig_sum|steep_sine|snapshot)");
        return p;
    }
    if (p.kind == ProfileSpec::Kind::snapshot) {
        p.path = j.value("path", "");
        p.field = j.value("field", "h");
        if (p.path.empty()) issues.push_back(where + ": snapshot profile needs a 'path'");
        return p;
    }
    if (p.kind == ProfileSpec::Kind::trig_sum) {
        if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty()) {
            issues.push_back(where + ": trig_sum needs a non-empty 'terms' array");
            return p;
        }
        for (const auto& t : j["terms"]) {
            if (!t.is_array() || t.size() != 3) {
                issues.push_back(where + ": each trig_sum term must be [amplitude, mode, phase]");
                return p;
            }
            ProfileSpec::Term term{t[0].get<double>(), t[1].get<int>(), t[2].get<double>()};
            if (term.mode < 0) issues.push_back(where + ": trig_sum modes must be >= 0");
            p.terms.push_back(term);
        }
    } else {
        p.amplitude = j.value("amplitude", 0.0);
        p.mode = j.value("mode", 1);
        if (p.mode < 0) issues.push_back(where + ": mode must be >= 0");
        if (p.kind == ProfileSpec::Kind::steep_sine && j.contains("mode") && p.mode != 1)
            issues.push_back(where + ": steep_sine is fixed to mode 1");
    }
    if (!std::isfinite(p.amplitude)) issues.push_back(where + ": amplitude must be finite");
    return p;
}

GridSpec parse_grid(const json& j, std::vector<std::string>& issues) {
    GridSpec g;
    g.n_points = j.value("n_points", 256);
    g.length = j.value("length", two_pi);
    if (g.n_points < 8) issues.push_back("grid.n_points must be >= 8");
    if (g.n_points % 2 != 0) issues.push_back("grid.n_points must be even");
    if (!(g.length > 0.0)) issues.push_back("grid.length must be positive");
    return g;
}

json grid_json(const GridSpec& g) {
    return json{{"n_points", g.n_points}, {"length", g.length}};
}

json profile_json(const ProfileSpec& p) {
    switch (p.kind) {
        case ProfileSpec::Kind::sine:
            return json{{"profile", "sine"}, {"amplitude", p.amplitude}, {"mode", p.mode}};
        case ProfileSpec::Kind::cosine:
            return json{{"profile", "cosine"}, {"amplitude", p.amplitude}, {"mode", p.mode}};
        case ProfileSpec::Kind::steep_sine:
            return json{{"profile", "steep_sine"}, {"amplitude", p.amplitude}};
        case ProfileSpec::Kind::trig_sum: {
            json terms = json::array();
            for (const auto& t : p.terms) terms.push_back({t.amplitude, t.mode, t.phase});
            return json{{"profile", "trig_sum"}, {"terms", terms}};
        }
        case ProfileSpec::Kind::snapshot:
            return json{{"profile", "snapshot"}, {"path", p.path}, {"field", p.field}};
    }
    return {};
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("not valid JSON: ") + e.what()});
    }
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    const json j = parse_text(text);
    std::vector<std::string> issues;
    RunConfig cfg;

    const std::string model = j.value("model", "");
    auto mit = model_names.find(model);
    if (mit == model_names.end())
        issues.push_back("model must be one of full|boussinesq|biwave|uni");
    else
        cfg.model = mit->second;

    cfg.grid = parse_grid(j.value("grid", json::object()), issues);

    const json js = j.value("stepping", json::object());
    cfg.stepping.dt = js.value("dt", 1e-3);
    cfg.stepping.t_end = js.value("t_end", 1.0);
    cfg.stepping.snapshot_stride = js.value("snapshot_stride", 1);
    cfg.stepping.slope_blowup_threshold = js.value("slope_blowup_threshold", -1e3);
    if (!(cfg.stepping.dt > 0.0)) issues.push_back("stepping.dt must be positive");
    if (!(cfg.stepping.t_end >= 0.0)) issues.push_back("stepping.t_end must be >= 0");
    if (cfg.stepping.snapshot_stride < 1) issues.push_back("stepping.snapshot_stride must be >= 1");
    if (!(cfg.stepping.slope_blowup_threshold < 0.0))
        issues.push_back("stepping.slope_blowup_threshold must be negative");
    const std::string scheme = js.value("scheme", "rk4");
    if (scheme != "rk4") issues.push_back("stepping.scheme must be rk4");

    const json je = j.value("elliptic", json::object());
    cfg.elliptic.tol = je.value("tol", 1e-12);
    cfg.elliptic.max_iters = je.value("max_iters", 100);
    if (!(cfg.elliptic.tol > 0.0)) issues.push_back("elliptic.tol must be positive");
    if (cfg.elliptic.max_iters < 1) issues.push_back("elliptic.max_iters must be >= 1");

    const json jo = j.value("outputs", json::object());
    cfg.outputs.emit_timeseries = jo.value("emit_timeseries", true);
    cfg.outputs.emit_snapshots = jo.value("emit_snapshots", false);
    cfg.outputs.emit_plot_columns = jo.value("emit_plot_columns", false);

    const json ji = j.value("initial_data", json::object());
    cfg.mean_zero_project = ji.value("mean_zero_project", true);
    const auto valid_names = field_names(cfg.model);
    if (ji.contains("fields")) {
        for (const auto& [name, spec] : ji["fields"].items()) {
            if (mit != model_names.end() &&
                std::find(valid_names.begin(), valid_names.end(), name) == valid_names.end()) {
                issues.push_back("initial_data.fields: '" + name + "' is not a field of model " +
                                 model);
                continue;
            }
            ProfileSpec p = parse_profile(spec, "initial_data.fields." + name, issues);
            if (p.max_mode() > cfg.grid.n_points / 3)
                issues.push_back("initial_data.fields." + name +
                                 ": profile modes must be <= n_points/3");
            cfg.initial_fields.emplace(name, std::move(p));
        }
    }

    if (cfg.model == ModelKind::uni && !cfg.mean_zero_project) {
        auto it = cfg.initial_fields.find("h");
        if (it != cfg.initial_fields.end() && std::abs(it->second.mean()) > 0.0)
            issues.push_back(
                "uni model requires mean-zero initial data; enable mean_zero_project or "
                "choose a zero-mean profile");
    }

    if (!issues.empty()) throw ConfigError(issues);

    json echo{{"model", model_name(cfg.model)},
              {"grid", grid_json(cfg.grid)},
              {"stepping",
               {{"dt", cfg.stepping.dt},
                {"t_end", cfg.stepping.t_end},
                {"snapshot_stride", cfg.stepping.snapshot_stride},
                {"slope_blowup_threshold", cfg.stepping.slope_blowup_threshold},
                {"scheme", "rk4"}}},
              {"elliptic", {{"tol", cfg.elliptic.tol}, {"max_iters", cfg.elliptic.max_iters}}},
              {"outputs",
               {{"emit_timeseries", cfg.outputs.emit_timeseries},
                {"emit_snapshots", cfg.outputs.emit_snapshots},
                {"emit_plot_columns", cfg.outputs.emit_plot_columns}}}};
    json fields = json::object();
    for (const auto& [name, p] : cfg.initial_fields) fields[name] = profile_json(p);
    echo["initial_data"] = {{"fields", fields}, {"mean_zero_project", cfg.mean_zero_project}};
    cfg.echo = echo.dump(2);
    return cfg;
}

SweepConfig parse_sweep_config(const std::string& text) {
    const json j = parse_text(text);
    std::vector<std::string> issues;
    SweepConfig cfg;

    const std::string model = j.value("model", "");
    if (model == "boussinesq") cfg.model = ReducedModel::boussinesq;
    else if (model == "biwave") cfg.model = ReducedModel::biwave;
    else if (model == "uni") cfg.model = ReducedModel::uni;
    else issues.push_back("sweep model must be one of boussinesq|biwave|uni");

    cfg.grid = parse_grid(j.value("grid", json::object()), issues);
    cfg.dt = j.value("dt", 1e-3);
    if (!(cfg.dt > 0.0)) issues.push_back("dt must be positive");
    cfg.t_cmp = j.value("t_cmp", 1.0);
    if (!(cfg.t_cmp > 0.0 && cfg.t_cmp <= 1.0)) issues.push_back("t_cmp must lie in (0, 1]");

    if (j.contains("profile")) cfg.profile = parse_profile(j["profile"], "profile", issues);
    else issues.push_back("missing 'profile'");
    if (cfg.profile.max_mode() > cfg.grid.n_points / 3)
        issues.push_back("profile modes must be <= n_points/3");
    if (std::abs(cfg.profile.mean()) > 0.0) issues.push_back("profile must have zero mean");

    if (!j.contains("eps_list") || !j["eps_list"].is_array() || j["eps_list"].empty())
        issues.push_back("eps_list must be a non-empty array");
    else {
        for (const auto& e : j["eps_list"]) {
            const double eps = e.get<double>();
            if (!(eps > 0.0 && eps <= 0.5)) issues.push_back("eps values must lie in (0, 0.5]");
            cfg.eps_list.push_back(eps);
        }
        auto sorted = cfg.eps_list;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            issues.push_back("duplicate eps values");
        cfg.eps_list = sorted;
    }

    if (!issues.empty()) throw ConfigError(issues);

    json echo{{"model", model},
              {"profile", profile_json(cfg.profile)},
              {"eps_list", cfg.eps_list},
              {"t_cmp", cfg.t_cmp},
              {"grid", grid_json(cfg.grid)},
              {"dt", cfg.dt}};
    cfg.echo = echo.dump(2);
    return cfg;
}

DispersionConfig parse_dispersion_config(const std::string& text) {
    const json j = parse_text(text);
    std::vector<std::string> issues;
    DispersionConfig cfg;

    const std::string model = j.value("model", "");
    if (model == "biwave") cfg.model = WaveModel::biwave;
    else if (model == "uni") cfg.model = WaveModel::uni;
    else issues.push_back("dispersion model must be biwave or uni");

    cfg.grid = parse_grid(j.value("grid", json::object()), issues);
    cfg.dt = j.value("dt", 1e-3);
    if (!(cfg.dt > 0.0)) issues.push_back("dt must be positive");
    cfg.amplitude = j.value("amplitude", 1e-5);
    if (!(cfg.amplitude > 0.0 && cfg.amplitude <= 1e-4))
        issues.push_back("amplitude must lie in (0, 1e-4]");

    if (!j.contains("modes") || !j["modes"].is_array() || j["modes"].empty())
        issues.push_back("modes must be a non-empty array");
    else
        for (const auto& m : j["modes"]) {
            const int k = m.get<int>();
            if (k < 0 || k > cfg.grid.n_points / 3)
                issues.push_back("modes must lie in [0, n_points/3]");
            cfg.modes.push_back(k);
        }

    if (!issues.empty()) throw ConfigError(issues);
    return cfg;
}

namespace {

struct Column {
    const char* name;
    std::optional<double> DiagnosticsRecord::* member;
};

const std::vector<Column> optional_columns = {
    {"mass_h", &DiagnosticsRecord::mass_h},
    {"mass_v", &DiagnosticsRecord::mass_v},
    {"l2_h", &DiagnosticsRecord::l2_h},
    {"energy", &DiagnosticsRecord::energy},
    {"cross_I", &DiagnosticsRecord::cross_I},
    {"momentum_bi", &DiagnosticsRecord::momentum_bi},
};

void write_series(const std::vector<DiagnosticsRecord>& series, const std::filesystem::path& path,
                  char sep) {
    std::ofstream out(path);
    out << std::setprecision(17);
    out << "t";
    for (const auto& c : optional_columns)
        if ((series.front().*c.member).has_value()) out << sep << c.name;
    out << sep << "min_slope" << sep << "max_abs_h" << sep << "bmo_proxy\n";
    for (const auto& r : series) {
        out << r.t;
        for (const auto& c : optional_columns)
            if ((r.*c.member).has_value()) out << sep << *(r.*c.member);
        out << sep << r.min_slope << sep << r.max_abs_h << sep << r.bmo_proxy_accum << "\n";
    }
}

template <class State>
void write_snapshot(const std::filesystem::path& dir, long index, double t, const State& s,
                    const std::vector<std::string>& names) {
    std::ostringstream name;
    name << "snapshot_" << std::setw(8) << std::setfill('0') << index << ".txt";
    std::ofstream out(dir / name.str());
    out << std::setprecision(17);
    out << "t " << t << "\n";
    out << "x";
    for (const auto& fn : names) out << " " << fn;
    out << "\n";
    std::vector<const Field*> fields;
    if constexpr (std::is_same_v<State, FullPlasmaState>) fields = {&s.N, &s.U};
    else if constexpr (std::is_same_v<State, BoussinesqState>) fields = {&s.h, &s.v};
    else if constexpr (std::is_same_v<State, BiWaveState>) fields = {&s.h, &s.g};
    else fields = {&s.h};
    const PeriodicGrid& g = fields.front()->grid();
    for (int i = 0; i < g.n(); ++i) {
        out << g.x(i);
        for (const Field* f : fields) out << " " << f->samples()[i];
        out << "\n";
    }
}

json conserved_table(const DiagnosticsRecord& first, const DiagnosticsRecord& last) {
    json t = json::object();
    for (const auto& c : optional_columns) {
        if (!(first.*c.member).has_value()) continue;
        const double a = *(first.*c.member);
        const double b = *(last.*c.member);
        t[c.name] = {{"initial", a}, {"final", b}, {"drift", std::abs(b - a)}};
    }
    return t;
}

template <class State>
int drive_run(const RunConfig& cfg, State state0, const std::filesystem::path& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const auto t0 = std::chrono::steady_clock::now();

    BmoProxyAccumulator acc;
    std::vector<DiagnosticsRecord> series;
    std::function<DiagnosticsRecord(double, const State&)> record_fn =
        [&](double t, const State& s) { return record(cfg.model, s, t, acc); };

    long snapshot_index = 0;
    std::function<void(double, const State&, const DiagnosticsRecord&)> observer = nullptr;
    if (cfg.outputs.emit_snapshots) {
        fs::create_directories(out_dir / "snapshots");
        observer = [&](double t, const State& s, const DiagnosticsRecord&) {
            write_snapshot(out_dir / "snapshots", snapshot_index++, t, s,
                           field_names(cfg.model));
        };
    }

    RhsFn<State> rhs;
    if constexpr (std::is_same_v<State, FullPlasmaState>)
        rhs = [&cfg](const State& s) { return full_rhs(s, cfg.elliptic); };
    else if constexpr (std::is_same_v<State, BoussinesqState>)
        rhs = [](const State& s) { return boussinesq_rhs(s); };
    else if constexpr (std::is_same_v<State, BiWaveState>)
        rhs = [](const State& s) { return biwave_rhs(s); };
    else
        rhs = [](const State& s) { return uni_rhs(s); };

    std::string failure;
    StepOutcome<State> out{StepStatus::ok, 0.0, state0, std::nullopt};
    int code = exit_ok;
    try {
        out = integrate<State, DiagnosticsRecord>(rhs, state0, cfg.stepping, series, record_fn,
                                                  observer);
        code = status_exit(out.status);
    } catch (const EllipticNoConvergence& e) {
        failure = e.what();
        code = exit_elliptic_failure;
    } catch (const VacuumDensity& e) {
        failure = e.what();
        code = exit_elliptic_failure;
    }

    const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();

    if (cfg.outputs.emit_timeseries && !series.empty())
        write_series(series, out_dir / "timeseries.csv", ',');
    if (cfg.outputs.emit_plot_columns && !series.empty())
        write_series(series, out_dir / "timeseries.dat", ' ');

    json manifest{{"version", version_string},
                  {"config", json::parse(cfg.echo)},
                  {"grid", grid_json(cfg.grid)},
                  {"dt", cfg.stepping.dt},
                  {"wall_time_ms", wall_ms},
                  {"final_status", failure.empty() ? status_name(out.status) : "elliptic_failure"},
                  {"t_reached", out.t_reached}};
    if (!failure.empty()) manifest["error"] = failure;
    if (out.bracket)
        manifest["breakdown_bracket"] = {{"t_last_good", out.bracket->t_last_good},
                                         {"t_first_bad", out.bracket->t_first_bad}};
    if (!series.empty())
        manifest["conserved"] = conserved_table(series.front(), series.back());
    std::ofstream(out_dir / "manifest.json") << manifest.dump(2) << "\n";
    return code;
}

}  // namespace

int run_command(const RunConfig& cfg, const std::filesystem::path& out_dir) {
    const PeriodicGrid grid(cfg.grid.n_points, cfg.grid.length);
    auto build = [&](const char* name) {
        auto it = cfg.initial_fields.find(name);
        Field f = (it == cfg.initial_fields.end()) ? Field::zero(grid) : it->second.build(grid);
        if (cfg.mean_zero_project) return project_mean_zero(f);
        // snapshot-loaded data bypasses the symbolic mean check at parse time
        if (cfg.model == ModelKind::uni &&
            std::abs(integrate(f)) > 1e-12 * (1.0 + f.max_abs()) * grid.length())
            throw ConfigError(
                {"uni model requires mean-zero initial data; enable mean_zero_project or "
                 "choose a zero-mean profile"});
        return f;
    };
    switch (cfg.model) {
        case ModelKind::full:
            return drive_run(cfg, FullPlasmaState{build("N"), build("U")}, out_dir);
        case ModelKind::boussinesq:
            return drive_run(cfg, BoussinesqState{build("h"), build("v")}, out_dir);
        case ModelKind::biwave:
            return drive_run(cfg, BiWaveState{build("h"), build("g")}, out_dir);
        case ModelKind::uni:
            return drive_run(cfg, UniState{build("h")}, out_dir);
    }
    return exit_config_error;
}

int sweep_command(const SweepConfig& cfg, const std::filesystem::path& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const PeriodicGrid grid(cfg.grid.n_points, cfg.grid.length);
    const Field profile = cfg.profile.build(grid);

    const auto cells = consistency_cells(profile, cfg.eps_list, cfg.model, cfg.t_cmp, cfg.dt);
    const auto order = fit_consistency_order(cells);

    json jcells = json::array();
    int index = 0;
    for (const auto& c : cells) {
        json cell{{"index", index},
                  {"eps", c.eps},
                  {"error", c.error},
                  {"status", status_name(c.status)}};
        jcells.push_back(cell);
        std::ostringstream name;
        name << "cell_" << std::setw(3) << std::setfill('0') << index << "_manifest.json";
        json cm{{"version", version_string}, {"config", json::parse(cfg.echo)}, {"cell", cell}};
        std::ofstream(out_dir / name.str()) << cm.dump(2) << "\n";
        ++index;
    }
    json report{{"version", version_string},
                {"config", json::parse(cfg.echo)},
                {"comparison_time", cfg.t_cmp},
                {"cells", jcells}};
    if (order) report["fitted_order"] = *order;
    else report["fitted_order"] = nullptr;
    std::ofstream(out_dir / "consistency_report.json") << report.dump(2) << "\n";
    return exit_ok;
}

int dispersion_command(const DispersionConfig& cfg, std::ostream& out) {
    const PeriodicGrid grid(cfg.grid.n_points, cfg.grid.length);
    out << std::setprecision(12);
    out << "# k omega_analytic omega_measured abs_err\n";
    for (int k : cfg.modes) {
        if (k == 0) {
            out << "0 0 0 0\n";
            continue;
        }
        try {
            const auto m = measure_dispersion(cfg.model, k, cfg.amplitude, grid, cfg.dt);
            out << k << " " << m.omega_analytic << " " << m.omega_measured << " "
                << std::abs(m.omega_measured - m.omega_analytic) << "\n";
        } catch (const SignalTooNonlinear&) {
            out << k << " " << linear_dispersion(cfg.model, grid.wavenumber(k)).real()
                << " nan nan signal_too_nonlinear\n";
        }
    }
    return exit_ok;
}

int breaking_probe_command(double amplitude, const BreakingProbeOptions& opts,
                           const std::filesystem::path& out_dir) {
    namespace fs = std::filesystem;
    if (!(amplitude > 0.0)) throw ConfigError({"breaking-probe amplitude must be positive"});
    fs::create_directories(out_dir);
    const PeriodicGrid grid(opts.n_points, opts.length);
    const BreakingReport rep = run_breaking_probe(amplitude, grid, opts.dt, opts.threshold);

    std::ofstream trace(out_dir / "slope_trace.csv");
    trace << std::setprecision(17) << "t,min_slope\n";
    for (const auto& s : rep.slope_trace) trace << s.t << "," << s.min_slope << "\n";

    json j{{"version", version_string},
           {"amplitude", amplitude},
           {"grid", json{{"n_points", opts.n_points}, {"length", opts.length}}},
           {"dt", opts.dt},
           {"threshold", opts.threshold},
           {"m0", rep.m0},
           {"riccati_bound_time", rep.riccati_bound_time},
           {"breaking_detected", rep.breaking_detected},
           {"within_riccati_window", rep.within_riccati_window},
           {"linfty_bound_satisfied", rep.linfty_bound_satisfied},
           {"worst_linfty_slack", rep.worst_linfty_slack},
           {"t_reached", rep.t_reached}};
    if (rep.T_b_detected) j["T_b_detected"] = *rep.T_b_detected;
    if (rep.bracket)
        j["breakdown_bracket"] = {{"t_last_good", rep.bracket->t_last_good},
                                  {"t_first_bad", rep.bracket->t_first_bad}};
    std::ofstream(out_dir / "breaking_report.json") << j.dump(2) << "\n";
    return exit_ok;
}

}  // namespace coldwave
