// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures.  Tolerances are fixed here, not calibrated at run time.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "coldwave/cli_io.hpp"
#include "coldwave/diagnostics.hpp"
#include "coldwave/experiments.hpp"
#include "test_helpers.hpp"

using namespace coldwave;
using coldwave::testing::helmholtz_kernel_quadrature;
using coldwave::testing::random_band_limited;
using coldwave::testing::sup_diff;

namespace {

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Field dx(const Field& f) { return apply_multiplier(MultiplierKind::Dx, f); }

// ---------------------------------------------------------------- 1
Check operator_algebra() {
    Check c;
    const PeriodicGrid g(256);
    const double tol = 1e-12;

    const MultiplierKind kinds[] = {MultiplierKind::L,     MultiplierKind::N_op,
                                    MultiplierKind::Q,     MultiplierKind::SqrtL,
                                    MultiplierKind::SqrtQ, MultiplierKind::Dx,
                                    MultiplierKind::Dxx};
    for (auto kind : kinds)
        for (int k = 0; k <= g.dealias_cut(); k += 7) {
            Field f = Field::sample(g, [&](double x) { return std::cos(k * x + 0.3); });
            const auto got = apply_multiplier(kind, f).coeff(k);
            const auto want = symbol_eval(kind, g.wavenumber(k)) * f.coeff(k);
            const double scale = std::max(1.0, std::abs(want));
            c.require(std::abs(got - want) <= tol * scale, "eigenvalue check");
        }

    Field f = dealias(random_band_limited(g, 1, 80));
    const double scale = std::max(1.0, f.max_abs());
    Field Qf = apply_multiplier(MultiplierKind::Q, f);
    c.require(sup_diff(apply_multiplier(MultiplierKind::Dxx, Qf), Qf - f) <= tol * scale,
              "dxx Q = Q - I");
    c.require(sup_diff(dx(apply_multiplier(MultiplierKind::N_op, f)),
                       -1.0 * apply_multiplier(MultiplierKind::L, f)) <= tol * scale,
              "dx N = -L");
    c.require(sup_diff(apply_multiplier(MultiplierKind::SqrtL,
                                        apply_multiplier(MultiplierKind::SqrtL, f)),
                       apply_multiplier(MultiplierKind::L, f)) <= tol * scale,
              "sqrtL^2 = L");
    c.require(sup_diff(apply_multiplier(MultiplierKind::SqrtQ,
                                        apply_multiplier(MultiplierKind::SqrtQ, f)),
                       apply_multiplier(MultiplierKind::Q, f)) <= tol * scale,
              "sqrtQ^2 = Q");

    Field h = dealias(random_band_limited(g, 2, 80));
    const double a = integrate(multiply_dealiased(f, apply_multiplier(MultiplierKind::N_op, h)));
    const double b = integrate(multiply_dealiased(h, apply_multiplier(MultiplierKind::N_op, f)));
    c.require(std::abs(a + b) <= tol, "skew-adjointness");
    return c;
}

// ---------------------------------------------------------------- 2
Check lemma_identities() {
    Check c;
    const PeriodicGrid g(256);
    for (unsigned seed = 0; seed < 20; ++seed) {
        Field h = dealias(random_band_limited(g, seed, 80));
        Field Nh = apply_multiplier(MultiplierKind::N_op, h);
        c.require(std::abs(integrate(multiply_dealiased(h, Nh))) <= 1e-10, "int h Nh = 0");
        Field LhNh = apply_multiplier(MultiplierKind::L, multiply_dealiased(h, Nh));
        const double lhs = integrate(multiply_dealiased(h, LhNh));
        const double rhs =
            -0.5 * integrate(multiply_dealiased(h, dx(multiply_dealiased(Nh, Nh))));
        c.require(std::abs(lhs - rhs) <= 1e-10, "int h L(h Nh) identity");
    }
    return c;
}

// ---------------------------------------------------------------- 3
Check kernel_symbol_agreement() {
    Check c;
    const PeriodicGrid g(512);
    Field f = dealias(random_band_limited(g, 21, 40));
    const double err = sup_diff(helmholtz_kernel_quadrature(f), apply_multiplier(MultiplierKind::Q, f));
    c.require(err <= 1e-8, "kernel vs symbol err=" + fmt(err));
    return c;
}

// ---------------------------------------------------------------- 4
Check form_equivalence() {
    Check c;
    const PeriodicGrid g(256);
    for (unsigned seed = 100; seed < 105; ++seed) {
        Field h = dealias(random_band_limited(g, seed, 80));
        const double ce = sup_diff(commutator_L_Nh(h, CommutatorForm::raw),
                                   commutator_L_Nh(h, CommutatorForm::conservation));
        c.require(ce <= 1e-12, "commutator forms err=" + fmt(ce));
        const double ue =
            sup_diff(uni_rhs({h}, UniForm::standard).h, uni_rhs({h}, UniForm::conservation).h);
        c.require(ue <= 1e-12, "uni rhs forms err=" + fmt(ue));
    }
    return c;
}

// ---------------------------------------------------------------- 5
struct UniDrifts {
    double mass, l2_rel, energy_rel;
};

UniDrifts uni_conservation_drifts(double dt) {
    const PeriodicGrid g(256);
    UniState s0{Field::sample(g, [](double x) { return 0.05 * std::sin(x); })};
    const double m0 = integrate(s0.h);
    const double l0 = integrate(multiply_dealiased(s0.h, s0.h));
    const double e0 = energy_uni(s0.h);

    StepperConfig cfg;
    cfg.dt = dt;
    cfg.t_end = 5.0;
    cfg.snapshot_stride = 100;
    RhsFn<UniState> rhs = [](const UniState& s) { return uni_rhs(s); };
    UniDrifts d{0, 0, 0};
    std::vector<int> sink;
    std::function<int(double, const UniState&)> rec = [&](double, const UniState& s) {
        d.mass = std::max(d.mass, std::abs(integrate(s.h) - m0));
        d.l2_rel = std::max(d.l2_rel,
                            std::abs(integrate(multiply_dealiased(s.h, s.h)) - l0) / std::abs(l0));
        d.energy_rel = std::max(d.energy_rel, std::abs(energy_uni(s.h) - e0) / std::abs(e0));
        return 0;
    };
    integrate<UniState, int>(rhs, s0, cfg, sink, rec);
    return d;
}

Check uni_conservation() {
    Check c;
    const UniDrifts d1 = uni_conservation_drifts(1e-3);
    c.require(d1.mass <= 1e-12, "mass drift=" + fmt(d1.mass));
    c.require(d1.l2_rel <= 1e-8, "L2 drift=" + fmt(d1.l2_rel));
    c.require(d1.energy_rel <= 1e-8, "energy drift=" + fmt(d1.energy_rel));

    const UniDrifts d2 = uni_conservation_drifts(5e-4);
    const double rl = d1.l2_rel / d2.l2_rel;
    const double re = d1.energy_rel / d2.energy_rel;
    c.require(rl >= 10.0 && rl <= 22.0,
              "L2 dt-halving ratio=" + fmt(rl) + " (drifts " + fmt(d1.l2_rel) + " -> " +
                  fmt(d2.l2_rel) + ")");
    c.require(re >= 10.0 && re <= 22.0,
              "energy dt-halving ratio=" + fmt(re) + " (drifts " + fmt(d1.energy_rel) + " -> " +
                  fmt(d2.energy_rel) + ")");
    return c;
}

// ---------------------------------------------------------------- 6
Check boussinesq_conservation() {
    Check c;
    const PeriodicGrid g(256);
    BoussinesqState s0{Field::sample(g, [](double x) { return 0.05 * std::sin(x); }),
                       Field::sample(g, [](double x) { return 0.05 * std::sin(x); })};
    const double i1 = integrate(s0.h), i2 = integrate(s0.v);
    const double cross0 = integrate(multiply_dealiased(s0.h, s0.v));
    const double e0 = energy_boussinesq(s0.h, s0.v);

    StepperConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 2.0;
    cfg.snapshot_stride = 100;
    RhsFn<BoussinesqState> rhs = [](const BoussinesqState& s) { return boussinesq_rhs(s); };
    double dm = 0, dv = 0, dci = 0, de = 0;
    std::vector<int> sink;
    std::function<int(double, const BoussinesqState&)> rec = [&](double,
                                                                 const BoussinesqState& s) {
        dm = std::max(dm, std::abs(integrate(s.h) - i1));
        dv = std::max(dv, std::abs(integrate(s.v) - i2));
        dci = std::max(dci, std::abs(integrate(multiply_dealiased(s.h, s.v)) - cross0));
        de = std::max(de, std::abs(energy_boussinesq(s.h, s.v) - e0));
        return 0;
    };
    auto out = integrate<BoussinesqState, int>(rhs, s0, cfg, sink, rec);
    c.require(out.status == StepStatus::ok, "run broke down");
    c.require(dm <= 1e-12, "I1 drift=" + fmt(dm));
    c.require(dv <= 1e-12, "I2 drift=" + fmt(dv));
    c.require(dci / std::abs(cross0) <= 1e-8, "I(h,v) rel drift=" + fmt(dci / std::abs(cross0)));
    c.require(de / std::abs(e0) <= 1e-8, "E rel drift=" + fmt(de / std::abs(e0)));
    return c;
}

// ---------------------------------------------------------------- 7
Check biwave_mass_law() {
    Check c;
    const PeriodicGrid g(256);
    BiWaveState s0{Field::sample(g, [](double x) { return 0.02 * std::cos(x); }),
                   Field::sample(g, [](double x) { return 0.005 + 0.01 * std::cos(x); })};
    const double mh0 = integrate(s0.h);
    const double mg0 = integrate(s0.g);

    StepperConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 2.0;
    cfg.snapshot_stride = 50;
    const double p0 = momentum_biwave(s0.h, s0.g);
    RhsFn<BiWaveState> rhs = [](const BiWaveState& s) { return biwave_rhs(s); };
    double worst = 0.0, pworst = 0.0;
    std::vector<int> sink;
    std::function<int(double, const BiWaveState&)> rec = [&](double t, const BiWaveState& s) {
        worst = std::max(worst, std::abs(integrate(s.h) - mh0 - t * mg0));
        pworst = std::max(pworst, std::abs(momentum_biwave(s.h, s.g) - p0));
        return 0;
    };
    auto out = integrate<BiWaveState, int>(rhs, s0, cfg, sink, rec);
    c.require(out.status == StepStatus::ok, "run broke down");
    c.require(std::abs(mg0) > 1e-3, "test premise: nonzero int h1");
    c.require(worst <= 1e-8, "mass law err=" + fmt(worst));
    c.require(pworst <= 1e-10, "momentum drift=" + fmt(pworst));
    return c;
}

// ---------------------------------------------------------------- 8
Check dispersion() {
    Check c;
    const PeriodicGrid g(256);
    for (int k = 1; k <= 8; ++k) {
        const auto m = measure_dispersion(WaveModel::biwave, k, 1e-5, g, 1e-3);
        const double want = k / std::sqrt(1.0 + k * k);
        c.require(std::abs(m.omega_measured - want) <= 1e-6,
                  "biwave k=" + std::to_string(k) + " err=" +
                      fmt(std::abs(m.omega_measured - want)));
    }
    const auto m = measure_dispersion(WaveModel::uni, 1, 1e-5, g, 1e-3);
    c.require(std::abs(m.omega_measured + 0.75) <= 1e-6,
              "uni k=1 err=" + fmt(std::abs(m.omega_measured + 0.75)));
    return c;
}

// ---------------------------------------------------------------- 9
Check elliptic_solver() {
    Check c;
    const PeriodicGrid g(256);
    Field N = Field::sample(g, [](double x) { return 0.1 * std::cos(x); });
    const auto sol = solve_magnetic_field_detailed(N);
    c.require(sol.residual <= 1e-12, "residual=" + fmt(sol.residual));
    c.require(sol.iterations <= 50, "iterations=" + std::to_string(sol.iterations));

    const double eps = 1e-6;
    Field Ne = Field::sample(g, [&](double x) { return eps * std::cos(x); });
    Field B = solve_magnetic_field(Ne);
    const double err =
        sup_diff(B, Field::sample(g, [&](double x) { return 0.5 * eps * std::cos(x); }));
    c.require(err <= 1e-11, "linearization err=" + fmt(err));
    return c;
}

// ---------------------------------------------------------------- 10
Check asymptotic_consistency() {
    Check c;
    const PeriodicGrid g(256);
    Field profile = Field::sample(g, [](double x) { return std::sin(x); });
    const std::vector<double> eps{0.1, 0.05, 0.025};

    struct Row {
        ReducedModel model;
        const char* name;
        double floor;
    };
    for (const Row row : {Row{ReducedModel::boussinesq, "boussinesq", 2.5},
                          Row{ReducedModel::biwave, "biwave", 1.5},
                          Row{ReducedModel::uni, "uni", 1.5}}) {
        const auto rep = run_consistency(profile, eps, row.model, 1.0, 1e-3);
        bool clean = true;
        for (const auto& cell : rep.cells) clean &= cell.status == StepStatus::ok;
        c.require(clean, std::string(row.name) + ": cell breakdown");
        if (!clean) continue;
        for (size_t i = 1; i < rep.cells.size(); ++i)
            c.require(rep.cells[i].error < rep.cells[i - 1].error,
                      std::string(row.name) + ": errors not monotone in eps");
        c.require(rep.fitted_order.has_value(), std::string(row.name) + ": no fit");
        if (rep.fitted_order)
            c.require(*rep.fitted_order >= row.floor,
                      std::string(row.name) + " order=" + fmt(*rep.fitted_order) + " < " +
                          fmt(row.floor));
    }
    return c;
}

// ---------------------------------------------------------------- 11
Check wave_breaking() {
    Check c;
    const auto rep1024 = run_breaking_probe(10.0, PeriodicGrid(1024), 1e-5, -1e3);
    c.require(rep1024.breaking_detected, "no breakdown at a=10");
    if (rep1024.T_b_detected) {
        c.require(*rep1024.T_b_detected <= 0.2, "T_b=" + fmt(*rep1024.T_b_detected));
        const auto rep2048 = run_breaking_probe(10.0, PeriodicGrid(2048), 1e-5, -1e3);
        if (rep2048.T_b_detected) {
            const double rel =
                std::abs(*rep1024.T_b_detected - *rep2048.T_b_detected) / *rep1024.T_b_detected;
            c.require(rel <= 0.05, "T_b resolution change=" + fmt(rel));
        } else {
            c.require(false, "no breakdown at n=2048");
        }
    }
    c.require(rep1024.linfty_bound_satisfied,
              "sup-norm bound slack=" + fmt(rep1024.worst_linfty_slack));
    c.require(rep1024.worst_linfty_slack >= -1e-6, "slack below -1e-6");

    // gentle amplitude runs smoothly to t = 5
    const PeriodicGrid g(256);
    UniState s0{Field::sample(g, [](double x) { return -0.01 * std::sin(x); })};
    StepperConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 5.0;
    cfg.snapshot_stride = 1000;
    RhsFn<UniState> rhs = [](const UniState& s) { return uni_rhs(s); };
    std::vector<int> sink;
    std::function<int(double, const UniState&)> rec = [](double, const UniState&) { return 0; };
    auto out = integrate<UniState, int>(rhs, s0, cfg, sink, rec);
    c.require(out.status == StepStatus::ok, "gentle run did not stay smooth");
    return c;
}

// ---------------------------------------------------------------- 12
Check variational_gradient() {
    Check c;
    const PeriodicGrid g(256);
    Field h = 0.3 * dealias(random_band_limited(g, 5, 40));
    Field phi = dealias(random_band_limited(g, 6, 40));
    const double tau = 1e-5;
    const double fd = (energy_uni(axpy(h, tau, phi)) - energy_uni(axpy(h, -tau, phi))) / (2 * tau);
    const double directional = integrate(multiply_dealiased(variational_gradient_uni(h), phi));
    c.require(std::abs(fd - directional) <= 1e-8,
              "finite-difference err=" + fmt(std::abs(fd - directional)));

    const double flow_err =
        sup_diff(0.5 * dx(variational_gradient_uni(h)), uni_rhs({h}).h);
    c.require(flow_err <= 1e-10, "1/2 dx dE vs uni rhs err=" + fmt(flow_err));
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Check()> fn;
    };
    const std::vector<Criterion> criteria = {
        {"operator algebra (1e-12, n=256)", operator_algebra},
        {"Plancherel identities (1e-10, 20 seeds)", lemma_identities},
        {"kernel-symbol agreement (1e-8, n=512)", kernel_symbol_agreement},
        {"commutator and uni-rhs form equivalence (1e-12)", form_equivalence},
        {"uni conservation (mass/L2/energy + dt^4 ratio)", uni_conservation},
        {"boussinesq conservation (I1/I2 exact, I/E 1e-8)", boussinesq_conservation},
        {"bidirectional linear-in-time mass law (1e-8)", biwave_mass_law},
        {"dispersion biwave k=1..8 and uni k=1 (1e-6)", dispersion},
        {"elliptic solver (residual 1e-12, linearization 1e-11)", elliptic_solver},
        {"asymptotic consistency orders (>=2.5 / >=1.5 / >=1.5)", asymptotic_consistency},
        {"wave breaking probe (T_b, resolution, sup-norm bound)", wave_breaking},
        {"variational gradient (FD 1e-8, flow identity 1e-10)", variational_gradient},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Check c = criteria[i].fn();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %2zu: %s (%.2fs)%s%s\n", c.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, secs, c.pass ? "" : " -- ",
                    c.pass ? "" : c.detail.str().c_str());
        if (!c.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
