#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coldwave/cli_io.hpp"
#include "coldwave/diagnostics.hpp"
#include "coldwave/experiments.hpp"

namespace py = pybind11;
using namespace coldwave;

namespace {

Field field_from_array(const PeriodicGrid& g, const py::array_t<double>& a) {
    if (a.ndim() != 1 || a.shape(0) != g.n())
        throw std::invalid_argument("array length must equal grid n_points");
    auto r = a.unchecked<1>();
    std::vector<double> s(g.n());
    for (int i = 0; i < g.n(); ++i) s[i] = r(i);
    return Field(g, std::move(s));
}

py::array_t<double> array_from_field(const Field& f) {
    py::array_t<double> a(f.samples().size());
    auto w = a.mutable_unchecked<1>();
    for (size_t i = 0; i < f.samples().size(); ++i) w(i) = f.samples()[i];
    return a;
}

}  // namespace

PYBIND11_MODULE(coldwave, m) {
    m.doc() = "Periodic pseudospectral solver for the cold-plasma model hierarchy";
    m.attr("__version__") = version_string;

    py::class_<PeriodicGrid>(m, "PeriodicGrid")
        .def(py::init<int, double>(), py::arg("n_points"), py::arg("length") = two_pi)
        .def_property_readonly("n_points", &PeriodicGrid::n)
        .def_property_readonly("length", &PeriodicGrid::length)
        .def_property_readonly("dealias_cut", &PeriodicGrid::dealias_cut)
        .def("sample_points",
             [](const PeriodicGrid& g) {
                 py::array_t<double> a(g.n());
                 auto w = a.mutable_unchecked<1>();
                 for (int i = 0; i < g.n(); ++i) w(i) = g.x(i);
                 return a;
             })
        .def("wavenumber", &PeriodicGrid::wavenumber, py::arg("mode"));

    py::class_<Field>(m, "Field")
        .def(py::init(&field_from_array), py::arg("grid"), py::arg("samples"))
        .def_property_readonly("samples", &array_from_field)
        .def_property_readonly("grid", &Field::grid)
        .def("coeff", &Field::coeff, py::arg("mode"))
        .def("max_abs", &Field::max_abs);

    py::enum_<MultiplierKind>(m, "MultiplierKind")
        .value("L", MultiplierKind::L)
        .value("N_op", MultiplierKind::N_op)
        .value("Q", MultiplierKind::Q)
        .value("SqrtL", MultiplierKind::SqrtL)
        .value("SqrtQ", MultiplierKind::SqrtQ)
        .value("Dx", MultiplierKind::Dx)
        .value("Dxx", MultiplierKind::Dxx);

    m.def("symbol_eval", &symbol_eval, py::arg("kind"), py::arg("xi"));
    m.def("apply_multiplier", &apply_multiplier, py::arg("kind"), py::arg("field"));
    m.def("dealias", &dealias, py::arg("field"));
    m.def(
        "integrate_field", [](const Field& f) { return integrate(f); }, py::arg("field"));
    m.def("project_mean_zero", &project_mean_zero, py::arg("field"));
    m.def("translate", &translate, py::arg("field"), py::arg("dist"));
    m.def(
        "commutator_L_Nh",
        [](const Field& h, const std::string& form) {
            return commutator_L_Nh(h, form == "raw" ? CommutatorForm::raw
                                                    : CommutatorForm::conservation);
        },
        py::arg("h"), py::arg("form") = "conservation");

    py::enum_<WaveModel>(m, "WaveModel")
        .value("biwave", WaveModel::biwave)
        .value("uni", WaveModel::uni);

    m.def("linear_dispersion", &linear_dispersion, py::arg("model"), py::arg("k"));

    py::class_<EllipticSolveParams>(m, "EllipticSolveParams")
        .def(py::init<>())
        .def_readwrite("tol", &EllipticSolveParams::tol)
        .def_readwrite("max_iters", &EllipticSolveParams::max_iters);

    m.def("solve_magnetic_field", &solve_magnetic_field, py::arg("N"),
          py::arg("params") = EllipticSolveParams{});

    m.def(
        "full_rhs",
        [](const Field& N, const Field& U) {
            auto d = full_rhs({N, U});
            return py::make_tuple(d.N, d.U);
        },
        py::arg("N"), py::arg("U"));
    m.def(
        "boussinesq_rhs",
        [](const Field& h, const Field& v) {
            auto d = boussinesq_rhs({h, v});
            return py::make_tuple(d.h, d.v);
        },
        py::arg("h"), py::arg("v"));
    m.def(
        "biwave_rhs",
        [](const Field& h, const Field& g) {
            auto d = biwave_rhs({h, g});
            return py::make_tuple(d.h, d.g);
        },
        py::arg("h"), py::arg("g"));
    m.def(
        "uni_rhs",
        [](const Field& h, const std::string& form) {
            return uni_rhs({h}, form == "conservation" ? UniForm::conservation
                                                       : UniForm::standard)
                .h;
        },
        py::arg("h"), py::arg("form") = "standard");

    m.def("energy_boussinesq", &energy_boussinesq, py::arg("h"), py::arg("v"));
    m.def("energy_uni", &energy_uni, py::arg("h"));
    m.def("variational_gradient_uni", &variational_gradient_uni, py::arg("h"));
    m.def("momentum_biwave", &momentum_biwave, py::arg("h"), py::arg("g"));

    m.def(
        "run_uni",
        [](const Field& h0, double dt, double t_end, double threshold) {
            StepperConfig cfg;
            cfg.dt = dt;
            cfg.t_end = t_end;
            cfg.snapshot_stride = 1 << 30;
            cfg.slope_blowup_threshold = threshold;
            std::vector<int> sink;
            std::function<int(double, const UniState&)> rec = [](double, const UniState&) {
                return 0;
            };
            RhsFn<UniState> rhs = [](const UniState& s) { return uni_rhs(s); };
            auto out = integrate<UniState, int>(rhs, {h0}, cfg, sink, rec);
            const char* status = out.status == StepStatus::ok ? "ok"
                                 : out.status == StepStatus::breakdown_slope
                                     ? "breakdown_slope"
                                     : "breakdown_nonfinite";
            return py::make_tuple(status, out.t_reached, out.state.h);
        },
        py::arg("h0"), py::arg("dt"), py::arg("t_end"), py::arg("threshold") = -1e3);

    m.def("far_field_shift", &far_field_shift, py::arg("h"), py::arg("t"));

    py::class_<DispersionMeasurement>(m, "DispersionMeasurement")
        .def_readonly("omega_measured", &DispersionMeasurement::omega_measured)
        .def_readonly("omega_analytic", &DispersionMeasurement::omega_analytic)
        .def_readonly("second_harmonic_ratio", &DispersionMeasurement::second_harmonic_ratio);

    m.def("measure_dispersion", &measure_dispersion, py::arg("model"), py::arg("k"),
          py::arg("amplitude"), py::arg("grid"), py::arg("dt"));

    py::class_<BreakingReport>(m, "BreakingReport")
        .def_readonly("m0", &BreakingReport::m0)
        .def_readonly("riccati_bound_time", &BreakingReport::riccati_bound_time)
        .def_readonly("breaking_detected", &BreakingReport::breaking_detected)
        .def_property_readonly(
            "T_b_detected",
            [](const BreakingReport& r) -> py::object {
                if (r.T_b_detected) return py::float_(*r.T_b_detected);
                return py::none();
            })
        .def_readonly("within_riccati_window", &BreakingReport::within_riccati_window)
        .def_readonly("linfty_bound_satisfied", &BreakingReport::linfty_bound_satisfied)
        .def_readonly("worst_linfty_slack", &BreakingReport::worst_linfty_slack)
        .def_readonly("t_reached", &BreakingReport::t_reached);

    m.def("run_breaking_probe", &run_breaking_probe, py::arg("amplitude"), py::arg("grid"),
          py::arg("dt"), py::arg("threshold") = -1e3);

    py::enum_<ReducedModel>(m, "ReducedModel")
        .value("boussinesq", ReducedModel::boussinesq)
        .value("biwave", ReducedModel::biwave)
        .value("uni", ReducedModel::uni);

    py::class_<ConsistencyCell>(m, "ConsistencyCell")
        .def_readonly("eps", &ConsistencyCell::eps)
        .def_readonly("error", &ConsistencyCell::error);

    py::class_<ConsistencyReport>(m, "ConsistencyReport")
        .def_readonly("cells", &ConsistencyReport::cells)
        .def_property_readonly("fitted_order", [](const ConsistencyReport& r) -> py::object {
            if (r.fitted_order) return py::float_(*r.fitted_order);
            return py::none();
        });

    m.def("run_consistency", &run_consistency, py::arg("profile"), py::arg("eps_list"),
          py::arg("model"), py::arg("t_cmp"), py::arg("dt"));
}
