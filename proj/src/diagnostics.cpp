#include "coldwave/diagnostics.hpp"

#include <cmath>

namespace coldwave {

namespace {

// Mode-0 reading of a pointwise product.  All stored fields are band-limited
// to n/3, so cubic products stay below the Nyquist fold and the quadrature
// is exact.
double integral_product(const Field& a, const Field& b) {
    const int n = a.grid().n();
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += a.samples()[i] * b.samples()[i];
    return acc * a.grid().length() / n;
}

double integral_product(const Field& a, const Field& b, const Field& c) {
    const int n = a.grid().n();
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += a.samples()[i] * b.samples()[i] * c.samples()[i];
    return acc * a.grid().length() / n;
}

Field opN(const Field& f) { return apply_multiplier(MultiplierKind::N_op, f); }

double sup_slope(const Field& h) {
    return apply_multiplier(MultiplierKind::Dx, h).max_abs();
}

double min_slope(const Field& h) {
    return apply_multiplier(MultiplierKind::Dx, h).min_sample();
}

void require(ModelKind got, ModelKind want) {
    if (got != want) throw ModelMismatch("record: state type does not match model kind");
}

}  // namespace

double energy_boussinesq(const Field& h, const Field& v) {
    const Field Bh = apply_multiplier(MultiplierKind::SqrtQ, h);
    const Field Nh = opN(h);
    return 0.5 * (integral_product(v, v) + integral_product(v, v, h) +
                  integral_product(Bh, Bh) + integral_product(h, Nh, Nh));
}

double energy_uni(const Field& h) {
    const Field Bh = apply_multiplier(MultiplierKind::SqrtQ, h);
    const Field Nh = opN(h);
    return 0.5 * (integral_product(h, h) - integral_product(h, h, h) +
                  integral_product(Bh, Bh) + integral_product(h, Nh, Nh));
}

Field variational_gradient_uni(const Field& h) {
    const Field Nh = opN(h);
    Field out = h - 1.5 * multiply_dealiased(h, h);
    out = out + apply_multiplier(MultiplierKind::Q, h);
    out = axpy(out, 0.5, multiply_dealiased(Nh, Nh));
    return out - opN(multiply_dealiased(h, Nh));
}

double momentum_biwave(const Field& h, const Field& g) {
    const Field flux = apply_multiplier(MultiplierKind::Dx, multiply_dealiased(h, h));
    return integrate(g) + integrate(flux);
}

double BmoProxyAccumulator::update(double t, double v) {
    if (has_last_) accum_ += 0.5 * (v + last_v_) * (t - last_t_);
    has_last_ = true;
    last_t_ = t;
    last_v_ = v;
    return accum_;
}

DiagnosticsRecord record(ModelKind kind, const FullPlasmaState& s, double t,
                         BmoProxyAccumulator& acc) {
    require(kind, ModelKind::full);
    DiagnosticsRecord r;
    r.t = t;
    r.mass_h = integrate(s.N);
    r.mass_v = integrate(s.U);
    r.l2_h = integral_product(s.N, s.N);
    r.min_slope = min_slope(s.N);
    r.max_abs_h = s.N.max_abs();
    r.bmo_proxy_accum = acc.update(t, sup_slope(s.N));
    return r;
}

DiagnosticsRecord record(ModelKind kind, const BoussinesqState& s, double t,
                         BmoProxyAccumulator& acc) {
    require(kind, ModelKind::boussinesq);
    DiagnosticsRecord r;
    r.t = t;
    r.mass_h = integrate(s.h);
    r.mass_v = integrate(s.v);
    r.l2_h = integral_product(s.h, s.h);
    r.energy = energy_boussinesq(s.h, s.v);
    r.cross_I = integral_product(s.h, s.v);
    r.min_slope = min_slope(s.h);
    r.max_abs_h = s.h.max_abs();
    r.bmo_proxy_accum = acc.update(t, sup_slope(s.h));
    return r;
}

DiagnosticsRecord record(ModelKind kind, const BiWaveState& s, double t,
                         BmoProxyAccumulator& acc) {
    require(kind, ModelKind::biwave);
    DiagnosticsRecord r;
    r.t = t;
    r.mass_h = integrate(s.h);
    r.l2_h = integral_product(s.h, s.h);
    r.momentum_bi = momentum_biwave(s.h, s.g);
    r.min_slope = min_slope(s.h);
    r.max_abs_h = s.h.max_abs();
    r.bmo_proxy_accum = acc.update(t, sup_slope(s.h));
    return r;
}

DiagnosticsRecord record(ModelKind kind, const UniState& s, double t, BmoProxyAccumulator& acc) {
    require(kind, ModelKind::uni);
    DiagnosticsRecord r;
    r.t = t;
    r.mass_h = integrate(s.h);
    r.l2_h = integral_product(s.h, s.h);
    r.energy = energy_uni(s.h);
    r.min_slope = min_slope(s.h);
    r.max_abs_h = s.h.max_abs();
    r.bmo_proxy_accum = acc.update(t, sup_slope(s.h));
    return r;
}

}  // namespace coldwave
