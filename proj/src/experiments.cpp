#include "coldwave/experiments.hpp"

#include <algorithm>
#include <cmath>

namespace coldwave {

namespace {

Field dx(const Field& f) { return apply_multiplier(MultiplierKind::Dx, f); }

double sup_diff(const Field& a, const Field& b) { return (a - b).max_abs(); }

std::optional<double> fit_log_slope(const std::vector<ConsistencyCell>& cells) {
    std::vector<double> xs, ys;
    for (const auto& c : cells)
        if (c.status == StepStatus::ok && c.error > 0.0) {
            xs.push_back(std::log(c.eps));
            ys.push_back(std::log(c.error));
        }
    if (xs.size() < 2) return std::nullopt;
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double num = 0, den = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    return num / den;
}

}  // namespace

WellPreparedData::WellPreparedData(Field profile_, double eps_)
    : eps(eps_), profile(std::move(profile_)) {
    if (!(eps > 0.0 && eps <= 0.5))
        throw std::invalid_argument("WellPreparedData: eps must lie in (0, 0.5]");
    if (std::abs(integrate(profile)) > 1e-12 * (1.0 + profile.max_abs()))
        throw std::invalid_argument("WellPreparedData: profile must have zero mean");
    const int cut = profile.grid().dealias_cut();
    for (int j = cut + 1; j <= profile.grid().n() / 2; ++j)
        if (std::abs(profile.spectrum()[j]) > 1e-12)
            throw std::invalid_argument("WellPreparedData: profile must be band-limited to n/3");
}

FullPlasmaState WellPreparedData::full_state() const {
    return {eps * profile, eps * profile};
}

BoussinesqState WellPreparedData::boussinesq_state() const {
    return {eps * profile, eps * profile};
}

BiWaveState WellPreparedData::biwave_state() const {
    const Field h0 = eps * profile;
    const Field h1 = axpy(-dx(h0), eps, uni_rhs({h0}).h);
    return {h0, h1};
}

UniState WellPreparedData::uni_state() const { return {eps * profile}; }

Field far_field_shift(const Field& h, double t) { return translate(h, t); }

std::optional<double> fit_consistency_order(const std::vector<ConsistencyCell>& cells) {
    return fit_log_slope(cells);
}

std::vector<ConsistencyCell> consistency_cells(const Field& profile,
                                               const std::vector<double>& eps_list,
                                               ReducedModel model, double t_cmp, double dt) {
    if (!(t_cmp > 0.0 && t_cmp <= 1.0))
        throw std::invalid_argument("consistency: t_cmp must lie in (0, 1]");
    std::vector<ConsistencyCell> cells;
    for (double eps : eps_list) {
        const WellPreparedData data(profile, eps);
        StepperConfig cfg;
        cfg.dt = dt;
        cfg.t_end = t_cmp;
        cfg.snapshot_stride = 1 << 30;  // endpoints only

        auto norecord = [](double, const auto&) { return 0; };
        std::vector<int> sink;

        RhsFn<FullPlasmaState> frhs = [](const FullPlasmaState& s) { return full_rhs(s); };
        StepOutcome<FullPlasmaState> full{StepStatus::ok, 0.0, data.full_state(), std::nullopt};
        try {
            full = integrate<FullPlasmaState, int>(frhs, data.full_state(), cfg, sink, norecord);
        } catch (const EllipticNoConvergence&) {
            full.status = StepStatus::breakdown_nonfinite;  // left the solvable regime
        } catch (const VacuumDensity&) {
            full.status = StepStatus::breakdown_nonfinite;
        }
        if (full.status != StepStatus::ok) {
            cells.push_back({eps, 0.0, full.status});
            continue;
        }

        double err = 0.0;
        StepStatus status = StepStatus::ok;
        switch (model) {
            case ReducedModel::boussinesq: {
                RhsFn<BoussinesqState> rhs = [](const BoussinesqState& s) {
                    return boussinesq_rhs(s);
                };
                auto out = integrate<BoussinesqState, int>(rhs, data.boussinesq_state(), cfg,
                                                           sink, norecord);
                status = out.status;
                if (status == StepStatus::ok) err = sup_diff(out.state.h, full.state.N);
                break;
            }
            case ReducedModel::biwave: {
                RhsFn<BiWaveState> rhs = [](const BiWaveState& s) { return biwave_rhs(s); };
                auto out =
                    integrate<BiWaveState, int>(rhs, data.biwave_state(), cfg, sink, norecord);
                status = out.status;
                if (status == StepStatus::ok) err = sup_diff(out.state.h, full.state.N);
                break;
            }
            case ReducedModel::uni: {
                StepperConfig slow = cfg;
                slow.t_end = eps * t_cmp;  // far-field time tau = eps t
                RhsFn<UniState> rhs = [](const UniState& s) { return uni_rhs(s); };
                auto out = integrate<UniState, int>(rhs, data.uni_state(), slow, sink, norecord);
                status = out.status;
                if (status == StepStatus::ok)
                    err = sup_diff(far_field_shift(out.state.h, t_cmp), full.state.N);
                break;
            }
        }
        cells.push_back({eps, err, status});
    }
    return cells;
}

ConsistencyReport run_consistency(const Field& profile, const std::vector<double>& eps_list,
                                  ReducedModel model, double t_cmp, double dt) {
    if (eps_list.size() < 3)
        throw std::invalid_argument("run_consistency: need at least 3 eps values");
    for (size_t i = 1; i < eps_list.size(); ++i)
        if (!(eps_list[i] < eps_list[i - 1]))
            throw std::invalid_argument("run_consistency: eps_list must be sorted descending");

    ConsistencyReport report{model, t_cmp, consistency_cells(profile, eps_list, model, t_cmp, dt),
                             std::nullopt};
    report.fitted_order = fit_log_slope(report.cells);
    return report;
}

DispersionMeasurement measure_dispersion(WaveModel model, int k, double amplitude,
                                         const PeriodicGrid& grid, double dt) {
    if (!(amplitude > 0.0 && amplitude <= 1e-4))
        throw std::invalid_argument("measure_dispersion: amplitude must lie in (0, 1e-4]");
    if (k < 1 || k > grid.dealias_cut())
        throw std::invalid_argument("measure_dispersion: k must be a retained grid mode");

    const double kphys = grid.wavenumber(k);
    const double om = linear_dispersion(model, kphys).real();
    const double period = two_pi / std::abs(om);
    const long steps = std::lround(period / dt);
    const double dts = period / static_cast<double>(steps);

    Field h = Field::sample(grid, [&](double x) { return amplitude * std::cos(kphys * x); });

    std::vector<double> ts, phases;
    ts.reserve(steps);
    phases.reserve(steps);
    double prev = 0.0;
    double wind = 0.0;
    auto push_phase = [&](double t, const Field& field) {
        double th = std::arg(field.spectrum()[k]);
        while (th + wind - prev > two_pi / 2) wind -= two_pi;
        while (th + wind - prev < -two_pi / 2) wind += two_pi;
        prev = th + wind;
        ts.push_back(t);
        phases.push_back(prev);
    };

    Field final_h = h;
    if (model == WaveModel::biwave) {
        Field g = Field::sample(
            grid, [&](double x) { return amplitude * om * std::sin(kphys * x); });
        BiWaveState s{h, g};
        RhsFn<BiWaveState> rhs = [](const BiWaveState& st) { return biwave_rhs(st); };
        for (long i = 0; i < steps; ++i) {
            s = rk4_step(rhs, s, dts);
            push_phase(dts * (i + 1), s.h);
        }
        final_h = s.h;
    } else {
        UniState s{h};
        RhsFn<UniState> rhs = [](const UniState& st) { return uni_rhs(st); };
        for (long i = 0; i < steps; ++i) {
            s = rk4_step(rhs, s, dts);
            push_phase(dts * (i + 1), s.h);
        }
        final_h = s.h;
    }

    double mt = 0, mp = 0;
    for (size_t i = 0; i < ts.size(); ++i) {
        mt += ts[i];
        mp += phases[i];
    }
    mt /= ts.size();
    mp /= phases.size();
    double num = 0, den = 0;
    for (size_t i = 0; i < ts.size(); ++i) {
        num += (ts[i] - mt) * (phases[i] - mp);
        den += (ts[i] - mt) * (ts[i] - mt);
    }
    const double omega_measured = -num / den;

    const double ek = std::norm(final_h.spectrum()[k]);
    const double e2k =
        (2 * k <= grid.n() / 2) ? std::norm(final_h.spectrum()[2 * k]) : 0.0;
    const double ratio = e2k / ek;
    if (ratio > 1e-6)
        throw SignalTooNonlinear("measure_dispersion: mode-2k energy above 1e-6 of mode-k");
    return {omega_measured, om, ratio};
}

BreakingReport run_breaking_probe(double amplitude, const PeriodicGrid& grid, double dt,
                                  double threshold) {
    if (!(amplitude > 0.0)) throw std::invalid_argument("run_breaking_probe: amplitude > 0");
    const double k1 = grid.wavenumber(1);
    const Field h0 =
        Field::sample(grid, [&](double x) { return -amplitude * std::sin(k1 * x); });

    BreakingReport rep;
    rep.m0 = dx(h0).min_sample();  // -a k1; -a on the default length
    rep.riccati_bound_time = -1.0 / rep.m0;
    const double t_max = 5.0 * rep.riccati_bound_time;

    const double M0 = h0.max_sample();
    double l2sq = 0.0;
    for (double v : h0.samples()) l2sq += v * v;
    l2sq *= grid.length() / grid.n();
    const double growth = 0.25 * (1.0 + l2sq);

    StepperConfig cfg;
    cfg.dt = dt;
    cfg.t_end = t_max;
    const long n_steps = std::lround(t_max / dt);
    cfg.snapshot_stride = static_cast<int>(std::clamp(n_steps / 1000, 1L, 1L << 30));
    cfg.slope_blowup_threshold = threshold;

    rep.worst_linfty_slack = 0.0;  // exact at t = 0
    auto record_fn = [&](double t, const UniState& s) {
        const double slack = (M0 + growth * t) - s.h.max_sample();
        if (slack < rep.worst_linfty_slack) rep.worst_linfty_slack = slack;
        return SlopeSample{t, dx(s.h).min_sample()};
    };

    RhsFn<UniState> rhs = [](const UniState& s) { return uni_rhs(s); };
    auto out = integrate<UniState, SlopeSample>(rhs, {h0}, cfg, rep.slope_trace, record_fn);

    rep.t_reached = out.t_reached;
    rep.breaking_detected = out.status != StepStatus::ok;
    rep.bracket = out.bracket;
    if (rep.breaking_detected && out.bracket)
        rep.T_b_detected = 0.5 * (out.bracket->t_last_good + out.bracket->t_first_bad);
    rep.within_riccati_window =
        rep.T_b_detected.has_value() && *rep.T_b_detected <= 2.0 * rep.riccati_bound_time;
    rep.linfty_bound_satisfied = rep.worst_linfty_slack >= -1e-6;
    return rep;
}

}  // namespace coldwave
