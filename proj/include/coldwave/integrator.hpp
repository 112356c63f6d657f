#ifndef COLDWAVE_INTEGRATOR_HPP
#define COLDWAVE_INTEGRATOR_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "coldwave/models.hpp"

namespace coldwave {

enum class StepStatus { ok, breakdown_nonfinite, breakdown_slope };

struct StepperConfig {
    double dt = 1e-3;
    double t_end = 1.0;
    int snapshot_stride = 1;
    double slope_blowup_threshold = -1e3;

    bool valid() const {
        return dt > 0.0 && t_end >= 0.0 && snapshot_stride >= 1 && slope_blowup_threshold < 0.0;
    }
};

struct BreakBracket {
    double t_last_good;
    double t_first_bad;
};

template <class State>
struct StepOutcome {
    StepStatus status;
    double t_reached;
    State state;
    std::optional<BreakBracket> bracket;  // set on breakdown
};

template <class State>
using RhsFn = std::function<State(const State&)>;

/// Classical fixed-step RK4.
template <class State>
State rk4_step(const RhsFn<State>& rhs, const State& s, double dt) {
    const State k1 = rhs(s);
    const State k2 = rhs(axpy(s, 0.5 * dt, k1));
    const State k3 = rhs(axpy(s, 0.5 * dt, k2));
    const State k4 = rhs(axpy(s, dt, k3));
    State out = axpy(s, dt / 6.0, k1);
    out = axpy(out, dt / 3.0, k2);
    out = axpy(out, dt / 3.0, k3);
    return axpy(out, dt / 6.0, k4);
}

/// breakdown_nonfinite if any sample is non-finite, breakdown_slope if
/// min_x dx(primary field) drops below threshold, ok otherwise.
template <class State>
StepStatus detect_breakdown(const State& s, double threshold) {
    if (!all_finite(s)) return StepStatus::breakdown_nonfinite;
    const Field slope = apply_multiplier(MultiplierKind::Dx, primary_field(s));
    if (slope.min_sample() < threshold) return StepStatus::breakdown_slope;
    return StepStatus::ok;
}

/// Steps until t_end or breakdown.  record_fn builds the per-snapshot
/// diagnostics (it may carry the run's accumulator); observer sees every
/// snapshot.  On breakdown no further steps are taken and the outcome
/// carries the bracket (last good t, first bad t).
template <class State, class Record>
StepOutcome<State> integrate(
    const RhsFn<State>& rhs, const State& state0, const StepperConfig& cfg,
    std::vector<Record>& series,
    const std::function<Record(double, const State&)>& record_fn,
    const std::function<void(double, const State&, const Record&)>& observer = nullptr) {
    State s = state0;
    double t = 0.0;
    series.push_back(record_fn(t, s));
    if (observer) observer(t, s, series.back());

    const long n_steps = std::lround(cfg.t_end / cfg.dt);
    for (long i = 0; i < n_steps; ++i) {
        const double t_next = cfg.dt * static_cast<double>(i + 1);
        StepStatus st;
        try {
            State next = rk4_step(rhs, s, cfg.dt);
            st = detect_breakdown(next, cfg.slope_blowup_threshold);
            if (st == StepStatus::ok) {
                s = std::move(next);
                t = t_next;
                if ((i + 1) % cfg.snapshot_stride == 0 || i + 1 == n_steps) {
                    series.push_back(record_fn(t, s));
                    if (observer) observer(t, s, series.back());
                }
                continue;
            }
        } catch (const NonFiniteField&) {
            // overflow inside a stage counts as a nonfinite breakdown
            st = StepStatus::breakdown_nonfinite;
        }
        return {st, t, std::move(s), BreakBracket{t, t_next}};
    }
    return {StepStatus::ok, t, std::move(s), std::nullopt};
}

/// Advisory step size, not enforced: 0.5 dx / (1 + max|v| + max|h|).
inline double suggest_dt(const Field& h, const Field* v = nullptr) {
    double speed = 1.0 + h.max_abs();
    if (v) speed += v->max_abs();
    return 0.5 * h.grid().dx() / speed;
}

}  // namespace coldwave

#endif
