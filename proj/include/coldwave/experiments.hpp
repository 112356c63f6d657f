#ifndef COLDWAVE_EXPERIMENTS_HPP
#define COLDWAVE_EXPERIMENTS_HPP

#include <optional>
#include <vector>

#include "coldwave/integrator.hpp"

namespace coldwave {

/// Initial states of amplitude eps built from one zero-mean band-limited
/// profile, with equal leading-order density and velocity for the wave
/// reductions.  The bidirectional initial velocity is the transport-
/// consistent physical value dh/dt(0) = -dx h0 + eps * uni_rhs(h0).
struct WellPreparedData {
    WellPreparedData(Field profile, double eps);

    FullPlasmaState full_state() const;
    BoussinesqState boussinesq_state() const;
    BiWaveState biwave_state() const;
    UniState uni_state() const;

    double eps;
    Field profile;
};

enum class ReducedModel { boussinesq, biwave, uni };

struct ConsistencyCell {
    double eps;
    double error;
    StepStatus status;
};

struct ConsistencyReport {
    ReducedModel model;
    double comparison_time;
    std::vector<ConsistencyCell> cells;
    std::optional<double> fitted_order;  // absent when fewer than 2 clean cells
};

/// Integrates the full system and one reduced model from well-prepared data
/// for each eps; error(eps) = sup|h_model - N_full| at t_cmp.  The
/// unidirectional solution is taken at slow time tau = eps*t_cmp and mapped
/// back through the moving frame before comparison.  Breakdowns are
/// reported per cell, never raised.  Requires >= 3 eps values, sorted
/// descending; consistency_cells below runs without the count requirement.
ConsistencyReport run_consistency(const Field& profile, const std::vector<double>& eps_list,
                                  ReducedModel model, double t_cmp, double dt);

std::vector<ConsistencyCell> consistency_cells(const Field& profile,
                                               const std::vector<double>& eps_list,
                                               ReducedModel model, double t_cmp, double dt);
std::optional<double> fit_consistency_order(const std::vector<ConsistencyCell>& cells);

/// h evaluated at chi = x - t: exact phase rotation of the coefficients.
Field far_field_shift(const Field& h, double t);

struct DispersionMeasurement {
    double omega_measured;
    double omega_analytic;
    double second_harmonic_ratio;
};

/// Evolves a single right-moving mode at tiny amplitude for one estimated
/// period and reads the frequency off a least-squares fit of the mode's
/// complex phase.  Throws SignalTooNonlinear when mode-2k energy exceeds
/// 1e-6 of mode-k energy.
DispersionMeasurement measure_dispersion(WaveModel model, int k, double amplitude,
                                         const PeriodicGrid& grid, double dt);

struct SlopeSample {
    double t;
    double min_slope;
};

struct BreakingReport {
    double m0;                      // min initial slope
    double riccati_bound_time;     // -1/m0
    bool breaking_detected;
    std::optional<double> T_b_detected;  // bracket midpoint
    std::optional<BreakBracket> bracket;
    bool within_riccati_window;    // T_b <= 2 * riccati_bound_time
    bool linfty_bound_satisfied;   // M(t) <= M(0) + (1/4)(1+|h0|_2^2) t along the trace
    double worst_linfty_slack;
    double t_reached;
    std::vector<SlopeSample> slope_trace;
};

/// Unidirectional breaking probe from the mode-1 profile h0 = -a sin(k1 x)
/// (m(0) = -a on the default 2 pi domain), run to slope breakdown or
/// t_max = -5/m(0).  Records the slope trace and checks the explicit
/// sup-norm growth bound along it.
BreakingReport run_breaking_probe(double amplitude, const PeriodicGrid& grid, double dt,
                                  double threshold);

}  // namespace coldwave

#endif
