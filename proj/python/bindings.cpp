#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "hankel/caratheodory.hpp"
#include "hankel/function_classes.hpp"
#include "hankel/objectives.hpp"
#include "hankel/optimizer.hpp"
#include "hankel/power_series.hpp"
#include "hankel/verification.hpp"

namespace py = pybind11;

namespace {

hankel::Objective objective_from_name(const std::string& name) {
    if (name == "g") return hankel::Objective::g;
    if (name == "g1") return hankel::Objective::g1;
    if (name == "h") return hankel::Objective::h;
    if (name == "h1") return hankel::Objective::h1;
    throw std::invalid_argument("unknown objective: " + name);
}

std::vector<hankel::cplx> series_coeffs(const hankel::TruncatedSeries& s) { return s.coeffs(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    using namespace hankel;

    m.doc() =
        "Sharp third Hankel determinant bounds for inverse coefficients of bounded turning "
        "functions";

    py::enum_<ClassId>(m, "ClassId").value("R", ClassId::R).value("R1", ClassId::R1);
    py::enum_<SampleMode>(m, "SampleMode")
        .value("uniform", SampleMode::uniform)
        .value("boundary_biased", SampleMode::boundary_biased);
    py::enum_<PointKind>(m, "PointKind")
        .value("vertex", PointKind::vertex)
        .value("edge", PointKind::edge)
        .value("interior", PointKind::interior);

    py::class_<SchurParams>(m, "SchurParams")
        .def(py::init<>())
        .def(py::init<cplx, cplx, cplx, cplx>(), py::arg("t1"), py::arg("t2"), py::arg("t3"),
             py::arg("t4"))
        .def_readonly("t1", &SchurParams::t1)
        .def_readonly("t2", &SchurParams::t2)
        .def_readonly("t3", &SchurParams::t3)
        .def_readonly("t4", &SchurParams::t4);

    py::class_<CaratheodoryCoeffs>(m, "CaratheodoryCoeffs")
        .def(py::init([](cplx c1, cplx c2, cplx c3, cplx c4) {
                 return CaratheodoryCoeffs{c1, c2, c3, c4};
             }),
             py::arg("c1"), py::arg("c2"), py::arg("c3"), py::arg("c4"))
        .def_readonly("c1", &CaratheodoryCoeffs::c1)
        .def_readonly("c2", &CaratheodoryCoeffs::c2)
        .def_readonly("c3", &CaratheodoryCoeffs::c3)
        .def_readonly("c4", &CaratheodoryCoeffs::c4);

    py::class_<ClassCoeffs>(m, "ClassCoeffs")
        .def(py::init([](cplx a2, cplx a3, cplx a4, cplx a5) {
                 return ClassCoeffs{a2, a3, a4, a5};
             }),
             py::arg("a2"), py::arg("a3"), py::arg("a4"), py::arg("a5"))
        .def_readonly("a2", &ClassCoeffs::a2)
        .def_readonly("a3", &ClassCoeffs::a3)
        .def_readonly("a4", &ClassCoeffs::a4)
        .def_readonly("a5", &ClassCoeffs::a5);

    py::class_<InverseCoeffs>(m, "InverseCoeffs")
        .def_readonly("A2", &InverseCoeffs::A2)
        .def_readonly("A3", &InverseCoeffs::A3)
        .def_readonly("A4", &InverseCoeffs::A4)
        .def_readonly("A5", &InverseCoeffs::A5);

    py::class_<CriticalPoint>(m, "CriticalPoint")
        .def_readonly("s", &CriticalPoint::s)
        .def_readonly("u", &CriticalPoint::u)
        .def_readonly("value", &CriticalPoint::value)
        .def_readonly("residual", &CriticalPoint::residual)
        .def_readonly("kind", &CriticalPoint::kind);

    py::class_<BoxMaxResult>(m, "BoxMaxResult")
        .def_readonly("max_value", &BoxMaxResult::max_value)
        .def_readonly("argmax_s", &BoxMaxResult::argmax_s)
        .def_readonly("argmax_u", &BoxMaxResult::argmax_u)
        .def_readonly("argmax_kind", &BoxMaxResult::argmax_kind)
        .def_readonly("candidates", &BoxMaxResult::candidates);

    py::class_<SamplingSummary>(m, "SamplingSummary")
        .def_readonly("n_samples", &SamplingSummary::n_samples)
        .def_readonly("seed", &SamplingSummary::seed)
        .def_readonly("mode", &SamplingSummary::mode)
        .def_readonly("sup_abs_h3", &SamplingSummary::sup_abs_h3)
        .def_readonly("argsup", &SamplingSummary::argsup)
        .def_readonly("violations", &SamplingSummary::violations)
        .def_readonly("envelope_violations", &SamplingSummary::envelope_violations);

    py::class_<VerifyConfig>(m, "VerifyConfig")
        .def(py::init<>())
        .def_readwrite("grid_n", &VerifyConfig::grid_n)
        .def_readwrite("n_samples", &VerifyConfig::n_samples)
        .def_readwrite("seed", &VerifyConfig::seed)
        .def_readwrite("tol", &VerifyConfig::tol)
        .def_readwrite("mode", &VerifyConfig::mode)
        .def_readwrite("consistency_n", &VerifyConfig::consistency_n);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("class_id", &BoundReport::class_id)
        .def_readonly("normalizer", &BoundReport::normalizer)
        .def_readonly("branch_a", &BoundReport::branch_a)
        .def_readonly("branch_b", &BoundReport::branch_b)
        .def_readonly("bound_num", &BoundReport::bound_num)
        .def_readonly("bound_den", &BoundReport::bound_den)
        .def_readonly("bound_float", &BoundReport::bound_float)
        .def_readonly("extremal_value", &BoundReport::extremal_value)
        .def_readonly("sampling", &BoundReport::sampling)
        .def_readonly("consistency_max_err", &BoundReport::consistency_max_err)
        .def_readonly("passed", &BoundReport::passed)
        .def_readonly("failure", &BoundReport::failure);

    m.def("schur_to_c", &schur_to_c, py::arg("t"));
    m.def(
        "herglotz_c",
        [](std::vector<double> weights, std::vector<cplx> points) {
            return herglotz_c(HerglotzAtoms(std::move(weights), std::move(points)));
        },
        py::arg("weights"), py::arg("points"));
    m.def("toeplitz_min_eig", &toeplitz_min_eig, py::arg("c"), py::arg("order"));
    m.def("sample_schur", &sample_schur, py::arg("seed"), py::arg("index"), py::arg("mode"));
    m.def("h3_schur_R", &h3_schur_R, py::arg("t"));
    m.def("h3_schur_R1", &h3_schur_R1, py::arg("t"));
    m.def("branch_condition_R", &branch_condition_R, py::arg("t1"), py::arg("t2"));
    m.def("branch_condition_R1", &branch_condition_R1, py::arg("t1"), py::arg("t2"));

    m.def("from_caratheodory_R", &from_caratheodory_R, py::arg("c"));
    m.def("from_caratheodory_R1", &from_caratheodory_R1, py::arg("c"));
    m.def("inverse_coeffs", &inverse_coeffs, py::arg("a"));
    m.def("h3", &h3, py::arg("x2"), py::arg("x3"), py::arg("x4"), py::arg("x5"));
    m.def("hankel_det", &hankel_det, py::arg("q"), py::arg("n"), py::arg("coeffs"));
    m.def("h3_inverse_R", &h3_inverse_R, py::arg("c"));
    m.def("h3_inverse_R1", &h3_inverse_R1, py::arg("c"));

    m.def(
        "revert",
        [](const std::vector<cplx>& a) { return series_coeffs(revert(TruncatedSeries(a))); },
        py::arg("coeffs"), "compositional inverse of a series given as [a0, a1, ...]");
    m.def(
        "r_from_starlike",
        [](const std::vector<cplx>& g) {
            return series_coeffs(r_from_starlike(TruncatedSeries(g)));
        },
        py::arg("coeffs"));
    m.def(
        "starlike_from_r",
        [](const std::vector<cplx>& f) {
            return series_coeffs(starlike_from_r(TruncatedSeries(f)));
        },
        py::arg("coeffs"));
    m.def(
        "extremal_f0_arctanh",
        [](int order) { return series_coeffs(extremal_f0_arctanh(order)); }, py::arg("order"));
    m.def(
        "extremal_fstar_R1", [](int order) { return series_coeffs(extremal_fstar_R1(order)); },
        py::arg("order"));
    m.def(
        "extremal_f0_theta",
        [](double theta, int order) { return series_coeffs(extremal_f0_theta(theta, order)); },
        py::arg("theta"), py::arg("order"));

    m.def(
        "objective_eval",
        [](const std::string& objective, double s, double u) {
            return eval(build(objective_from_name(objective)), s, u);
        },
        py::arg("objective"), py::arg("s"), py::arg("u"));
    m.def("envelope", &envelope, py::arg("cls"), py::arg("s"), py::arg("u"));
    m.def(
        "maximize_objective",
        [](const std::string& objective, int grid_n, double tol) {
            return maximize_on_box(build(objective_from_name(objective)), grid_n, tol);
        },
        py::arg("objective"), py::arg("grid_n") = 128, py::arg("tol") = 1e-10);

    m.def("verify_bound", &verify_bound, py::arg("cls"), py::arg("config") = VerifyConfig{});
    m.def("report_json", &report_json, py::arg("report"));
    m.def("report_text", &report_text, py::arg("report"));
    m.def(
        "sample_h3",
        [](ClassId cls, std::uint64_t n, std::uint64_t seed, SampleMode mode, double bound_float,
           double tol) { return sample_h3(cls, n, seed, mode, bound_float, tol, nullptr); },
        py::arg("cls"), py::arg("n"), py::arg("seed"), py::arg("mode"), py::arg("bound_float"),
        py::arg("tol") = 1e-10);
    m.def("consistency_suite", &consistency_suite, py::arg("cls"), py::arg("n"), py::arg("seed"));
    m.def("coefficient_bound_check", &coefficient_bound_check, py::arg("n_thetas"));
}
