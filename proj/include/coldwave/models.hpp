#ifndef COLDWAVE_MODELS_HPP
#define COLDWAVE_MODELS_HPP

#include <complex>

#include "coldwave/spectral.hpp"

namespace coldwave {

enum class ModelKind { full, boussinesq, biwave, uni };

/// Full plasma model in perturbation variables n = 1 + N, u = U, b = 1 + B.
struct FullPlasmaState {
    Field N, U;
};

struct BoussinesqState {
    Field h, v;
};

/// Bidirectional wave equation recast as first order in time, g = h_t.
struct BiWaveState {
    Field h, g;
};

struct UniState {
    Field h;
};

struct EllipticSolveParams {
    double tol = 1e-12;
    int max_iters = 100;
};

struct MagneticSolve {
    Field B;
    int iterations;
    double residual;
};

/// Solves B - N - dx(B_x / (1+N)) = 0 by Picard iteration preconditioned
/// with Q = (1 - dxx)^{-1}:  B <- Q[N + dx(B_x (1/(1+N) - 1))], B0 = Q N.
/// Throws VacuumDensity when 1+N <= 0 anywhere, EllipticNoConvergence when
/// the sup-norm residual stays above tol after max_iters sweeps.
MagneticSolve solve_magnetic_field_detailed(const Field& N, const EllipticSolveParams& params = {});
Field solve_magnetic_field(const Field& N, const EllipticSolveParams& params = {});

/// Ndot = -(UN)_x - U_x,  Udot = -U U_x - (1+B) B_x / (1+N).
FullPlasmaState full_rhs(const FullPlasmaState& s, const EllipticSolveParams& params = {});

/// hdot = -(hv)_x - v_x,  vdot = -v v_x - [L,Nh]h - Nh.
BoussinesqState boussinesq_rhs(const BoussinesqState& s);

/// hdot = g,  gdot = -Lh + dx(h h_x + [L,Nh]h) - 2 dx(h g).
BiWaveState biwave_rhs(const BiWaveState& s);

enum class UniForm { standard, conservation };

/// standard:      hdot = -1/2 (3 h h_x - [L,Nh]h - Nh - h_x)
/// conservation:  hdot = -dx(3/4 h^2 + 1/2 N(h Nh) - 1/4 (Nh)^2 - 1/2 Qh - 1/2 h)
UniState uni_rhs(const UniState& s, UniForm form = UniForm::standard);

enum class WaveModel { biwave, uni };

/// biwave: positive branch |k|/sqrt(1+k^2); uni: -(k/2)(1 + 1/(1+k^2)).
std::complex<double> linear_dispersion(WaveModel model, double k);

// Time-stepper plumbing: states combine member-wise.
inline FullPlasmaState axpy(const FullPlasmaState& a, double c, const FullPlasmaState& b) {
    return {axpy(a.N, c, b.N), axpy(a.U, c, b.U)};
}
inline BoussinesqState axpy(const BoussinesqState& a, double c, const BoussinesqState& b) {
    return {axpy(a.h, c, b.h), axpy(a.v, c, b.v)};
}
inline BiWaveState axpy(const BiWaveState& a, double c, const BiWaveState& b) {
    return {axpy(a.h, c, b.h), axpy(a.g, c, b.g)};
}
inline UniState axpy(const UniState& a, double c, const UniState& b) {
    return {axpy(a.h, c, b.h)};
}

/// Density-like field monitored for slope breakdown.
inline const Field& primary_field(const FullPlasmaState& s) { return s.N; }
inline const Field& primary_field(const BoussinesqState& s) { return s.h; }
inline const Field& primary_field(const BiWaveState& s) { return s.h; }
inline const Field& primary_field(const UniState& s) { return s.h; }

inline bool all_finite(const FullPlasmaState& s) { return s.N.is_finite() && s.U.is_finite(); }
inline bool all_finite(const BoussinesqState& s) { return s.h.is_finite() && s.v.is_finite(); }
inline bool all_finite(const BiWaveState& s) { return s.h.is_finite() && s.g.is_finite(); }
inline bool all_finite(const UniState& s) { return s.h.is_finite(); }

}  // namespace coldwave

#endif
