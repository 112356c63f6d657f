#ifndef COLDWAVE_DIAGNOSTICS_HPP
#define COLDWAVE_DIAGNOSTICS_HPP

#include <optional>

#include "coldwave/models.hpp"

namespace coldwave {

/// Snapshot of every conserved quantity and monitor that applies to the
/// model at hand.  Inapplicable entries stay empty, never zero-filled.
struct DiagnosticsRecord {
    double t = 0.0;
    std::optional<double> mass_h;       // integral of h (or N)
    std::optional<double> mass_v;       // integral of v (or U)
    std::optional<double> l2_h;         // integral of h^2
    std::optional<double> energy;       // model Hamiltonian, where one exists
    std::optional<double> cross_I;      // integral of h v (Boussinesq)
    std::optional<double> momentum_bi;  // integral of (g + dx h^2) (bidirectional)
    double min_slope = 0.0;             // min_x dx h
    double max_abs_h = 0.0;
    double bmo_proxy_accum = 0.0;       // int_0^t sup|h_x| dtau, trapezoid
};

/// E(h,v) = 1/2 int( v^2 (1+h) + (Bh)^2 + h (Nh)^2 ) with B = sqrt(Q).
double energy_boussinesq(const Field& h, const Field& v);

/// E(h) = 1/2 int( h^2 - h^3 + (Bh)^2 + h (Nh)^2 ).
double energy_uni(const Field& h);

/// dE/dh = h - 3/2 h^2 + Qh + 1/2 (Nh)^2 - N(h Nh).
Field variational_gradient_uni(const Field& h);

/// int( g + dx h^2 ) dx; the flux term integrates to zero on the period.
double momentum_biwave(const Field& h, const Field& g);

/// Trapezoid accumulator for the blow-up monitor int_0^t sup|h_x| dtau.
class BmoProxyAccumulator {
  public:
    double update(double t, double sup_slope);

  private:
    bool has_last_ = false;
    double last_t_ = 0.0, last_v_ = 0.0, accum_ = 0.0;
};

DiagnosticsRecord record(ModelKind kind, const FullPlasmaState& s, double t, BmoProxyAccumulator& acc);
DiagnosticsRecord record(ModelKind kind, const BoussinesqState& s, double t, BmoProxyAccumulator& acc);
DiagnosticsRecord record(ModelKind kind, const BiWaveState& s, double t, BmoProxyAccumulator& acc);
DiagnosticsRecord record(ModelKind kind, const UniState& s, double t, BmoProxyAccumulator& acc);

}  // namespace coldwave

#endif
