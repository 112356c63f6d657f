#include "coldwave/models.hpp"

#include <cmath>

namespace coldwave {

namespace {

Field pointwise(const PeriodicGrid& g, const std::vector<double>& s) {
    return Field(g, s);
}

Field dx(const Field& f) { return apply_multiplier(MultiplierKind::Dx, f); }
Field opN(const Field& f) { return apply_multiplier(MultiplierKind::N_op, f); }
Field opL(const Field& f) { return apply_multiplier(MultiplierKind::L, f); }
Field opQ(const Field& f) { return apply_multiplier(MultiplierKind::Q, f); }

}  // namespace

MagneticSolve solve_magnetic_field_detailed(const Field& N, const EllipticSolveParams& params) {
    if (!N.is_finite()) throw NonFiniteField("solve_magnetic_field: non-finite density");
    const PeriodicGrid& g = N.grid();
    const int n = g.n();
    std::vector<double> recip(n), recip_m1(n);
    for (int i = 0; i < n; ++i) {
        const double dens = 1.0 + N.samples()[i];
        if (!(dens > 0.0)) throw VacuumDensity("solve_magnetic_field: 1 + N <= 0");
        recip[i] = 1.0 / dens;
        recip_m1[i] = recip[i] - 1.0;
    }
    const Field r(g, recip), r1(g, recip_m1);

    auto residual_of = [&](const Field& B) {
        const Field res = B - N - dx(multiply_dealiased(dx(B), r));
        return res.max_abs();
    };

    Field B = opQ(N);
    double res = residual_of(B);
    for (int it = 1; it <= params.max_iters; ++it) {
        B = opQ(N + dx(multiply_dealiased(dx(B), r1)));
        res = residual_of(B);
        if (res <= params.tol) return {B, it, res};
    }
    throw EllipticNoConvergence("solve_magnetic_field: residual above tol after max_iters", res);
}

Field solve_magnetic_field(const Field& N, const EllipticSolveParams& params) {
    return solve_magnetic_field_detailed(N, params).B;
}

FullPlasmaState full_rhs(const FullPlasmaState& s, const EllipticSolveParams& params) {
    const PeriodicGrid& g = s.N.grid();
    const Field B = solve_magnetic_field(s.N, params);
    const Field Ndot = -(dx(multiply_dealiased(s.U, s.N)) + dx(s.U));

    const Field Bx = dx(B);
    std::vector<double> w(g.n());
    for (int i = 0; i < g.n(); ++i)
        w[i] = (1.0 + B.samples()[i]) * Bx.samples()[i] / (1.0 + s.N.samples()[i]);
    const Field Udot = -(multiply_dealiased(s.U, dx(s.U)) + dealias(pointwise(g, w)));
    return {Ndot, Udot};
}

BoussinesqState boussinesq_rhs(const BoussinesqState& s) {
    if (!all_finite(s)) throw NonFiniteField("boussinesq_rhs: non-finite state");
    const Field hdot = -(dx(multiply_dealiased(s.h, s.v)) + dx(s.v));
    const Field vdot = -(multiply_dealiased(s.v, dx(s.v)) +
                         commutator_L_Nh(s.h, CommutatorForm::conservation) + opN(s.h));
    return {hdot, vdot};
}

BiWaveState biwave_rhs(const BiWaveState& s) {
    if (!all_finite(s)) throw NonFiniteField("biwave_rhs: non-finite state");
    const Field flux = multiply_dealiased(s.h, dx(s.h)) +
                       commutator_L_Nh(s.h, CommutatorForm::conservation);
    const Field gdot = -opL(s.h) + dx(flux) - 2.0 * dx(multiply_dealiased(s.h, s.g));
    return {s.g, gdot};
}

UniState uni_rhs(const UniState& s, UniForm form) {
    if (!s.h.is_finite()) throw NonFiniteField("uni_rhs: non-finite state");
    const Field& h = s.h;
    if (form == UniForm::standard) {
        const Field hdot =
            -0.5 * (3.0 * multiply_dealiased(h, dx(h)) -
                    commutator_L_Nh(h, CommutatorForm::conservation) - opN(h) - dx(h));
        return {hdot};
    }
    const Field Nh = opN(h);
    Field flux = 0.75 * multiply_dealiased(h, h);
    flux = axpy(flux, 0.5, opN(multiply_dealiased(h, Nh)));
    flux = axpy(flux, -0.25, multiply_dealiased(Nh, Nh));
    flux = axpy(flux, -0.5, opQ(h));
    flux = axpy(flux, -0.5, h);
    return {-dx(flux)};
}

std::complex<double> linear_dispersion(WaveModel model, double k) {
    if (model == WaveModel::biwave) return std::abs(k) / std::sqrt(1.0 + k * k);
    return -(k / 2.0) * (1.0 + 1.0 / (1.0 + k * k));
}

}  // namespace coldwave
