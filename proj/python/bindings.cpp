#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "symplane/cli/command_line.hpp"
#include "symplane/cli/output.hpp"
#include "symplane/cli/report.hpp"
#include "symplane/core.hpp"
#include "symplane/dynamics.hpp"
#include "symplane/geometry.hpp"
#include "symplane/kinematics.hpp"

namespace py = pybind11;
using namespace symplane;

namespace {

std::string vec_repr(const Vec2& v) {
    std::ostringstream os;
    os.precision(17);
    os << "Vec2(" << v.x << ", " << v.y << ")";
    return os.str();
}

std::string report_text(const cli::RunReport& r) { return cli::to_json(r).dump(); }

cli::RunReport replay(const std::string& report_json) { return cli::rerun(cli::json::parse(report_json)); }

void bind_core(py::module_& m) {
    py::class_<Vec2>(m, "Vec2")
        .def(py::init<>())
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def(py::init([](const py::tuple& t) {
            if (t.size() != 2) throw Error(ErrorCode::InvalidArgument, "Vec2 needs exactly two components");
            return Vec2(t[0].cast<double>(), t[1].cast<double>());
        }))
        .def_readonly("x", &Vec2::x)
        .def_readonly("y", &Vec2::y)
        .def(-py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * double())
        .def(double() * py::self)
        .def(py::self / double())
        .def(py::self == py::self)
        .def("__iter__", [](const Vec2& v) { return py::iter(py::make_tuple(v.x, v.y)); })
        .def("__repr__", &vec_repr);
    py::implicitly_convertible<py::tuple, Vec2>();

    py::class_<Polar>(m, "Polar")
        .def(py::init<double, double>(), py::arg("magnitude"), py::arg("angle"))
        .def_readonly("magnitude", &Polar::magnitude)
        .def_readonly("angle", &Polar::angle);

    py::class_<IdentityResiduals>(m, "IdentityResiduals")
        .def_readonly("jacobi", &IdentityResiduals::jacobi)
        .def_readonly("grassmann_full", &IdentityResiduals::grassmann_full)
        .def_readonly("lagrange", &IdentityResiduals::lagrange)
        .def_readonly("grassmann_reduced", &IdentityResiduals::grassmann_reduced)
        .def_readonly("binet_cauchy", &IdentityResiduals::binet_cauchy);

    m.def("normalize_angle", &normalize_angle);
    m.def("tilde", &tilde);
    m.def("dot", &dot);
    m.def("symp", &symp);
    m.def("norm", &norm);
    m.def("inverse", &inverse);
    m.def("to_polar", &to_polar);
    m.def("from_polar", &from_polar);
    m.def("unit", &unit, py::arg("angle"));
    m.def("directed_angle", &directed_angle);
    m.def("similarity", &similarity, py::arg("a"), py::arg("c"), py::arg("d"));
    m.def("similarity_div", &similarity_div, py::arg("a"), py::arg("c"), py::arg("d"));
    m.def("rotate", &rotate, py::arg("a"), py::arg("phi"));
    m.def("identity_residuals", &identity_residuals);
}

void bind_geometry(py::module_& m) {
    py::class_<Line>(m, "Line")
        .def(py::init<const Vec2&, const Vec2&>(), py::arg("point"), py::arg("direction"))
        .def_readonly("point", &Line::point)
        .def_readonly("direction", &Line::direction);
    py::class_<Circle>(m, "Circle")
        .def(py::init<const Vec2&, double>(), py::arg("center"), py::arg("radius"))
        .def_readonly("center", &Circle::center)
        .def_readonly("radius", &Circle::radius);
    py::class_<Intersection>(m, "Intersection")
        .def_readonly("point", &Intersection::point)
        .def_readonly("lambda_", &Intersection::lambda)
        .def_readonly("mu", &Intersection::mu);
    py::enum_<TangentKind>(m, "TangentKind").value("outer", TangentKind::outer).value("inner", TangentKind::inner);
    py::class_<Tangent>(m, "Tangent")
        .def_readonly("touch1", &Tangent::touch1)
        .def_readonly("touch2", &Tangent::touch2)
        .def_readonly("direction_e", &Tangent::direction_e)
        .def_readonly("kind", &Tangent::kind)
        .def_readonly("lambda_", &Tangent::lambda)
        .def("line", &Tangent::line);

    m.def("collinearity_residual", &collinearity_residual);
    m.def("is_collinear", &is_collinear, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("tol"));
    m.def("simple_ratio", &simple_ratio);
    m.def("cross_ratio", &cross_ratio);
    m.def("intersect_lines", &intersect_lines);
    m.def("jacobi_triangle_residual", &jacobi_triangle_residual);
    m.def("project_point_onto_line", &project_point_onto_line);
    m.def("signed_distance", &signed_distance);
    m.def("circle_tangents", &circle_tangents);
    m.def("point_circle_tangents", &point_circle_tangents);
}

void bind_kinematics(py::module_& m) {
    py::class_<CrankConfig>(m, "CrankConfig")
        .def(py::init<double, const Vec2&, double>(), py::arg("crank_length"), py::arg("pivot_c"),
             py::arg("phi_dot"))
        .def_readonly("crank_length", &CrankConfig::crank_length)
        .def_readonly("pivot_c", &CrankConfig::pivot_c)
        .def_readonly("phi_dot", &CrankConfig::phi_dot);
    py::class_<CrankState>(m, "CrankState")
        .def_readonly("phi", &CrankState::phi)
        .def_readonly("s", &CrankState::s)
        .def_readonly("psi", &CrankState::psi)
        .def_readonly("s_dot", &CrankState::s_dot)
        .def_readonly("psi_dot", &CrankState::psi_dot)
        .def_readonly("s_ddot", &CrankState::s_ddot)
        .def_readonly("psi_ddot", &CrankState::psi_ddot)
        .def_readonly("e_psi", &CrankState::e_psi);
    py::class_<CrankSweepEntry>(m, "CrankSweepEntry")
        .def_readonly("phi", &CrankSweepEntry::phi)
        .def_readonly("state", &CrankSweepEntry::state)
        .def_readonly("singular", &CrankSweepEntry::singular)
        .def_readonly("near_singular", &CrankSweepEntry::near_singular)
        .def_readonly("psi_unwrapped", &CrankSweepEntry::psi_unwrapped);

    m.def("crank_state", &crank_state, py::arg("cfg"), py::arg("phi"));
    m.def("crank_sweep", &crank_sweep, py::arg("cfg"), py::arg("phi_start"), py::arg("phi_end"), py::arg("steps"));
    m.def("position_closure_residual", &position_closure_residual);
    m.def("velocity_closure_residual", &velocity_closure_residual);
    m.def("acceleration_closure_residual", &acceleration_closure_residual);
}

void bind_dynamics(py::module_& m) {
    py::class_<OscillatorParams>(m, "OscillatorParams")
        .def(py::init<double, double>(), py::arg("mass"), py::arg("stiffness"))
        .def_readonly("mass", &OscillatorParams::mass)
        .def_readonly("stiffness", &OscillatorParams::stiffness);
    py::class_<PhaseState>(m, "PhaseState")
        .def(py::init([](double q, double p, double t) { return PhaseState{q, p, t}; }), py::arg("q"), py::arg("p"),
             py::arg("t") = 0.0)
        .def_readonly("q", &PhaseState::q)
        .def_readonly("p", &PhaseState::p)
        .def_readonly("t", &PhaseState::t);
    py::enum_<Integrator>(m, "Integrator")
        .value("explicit_euler", Integrator::explicit_euler)
        .value("symplectic_euler", Integrator::symplectic_euler)
        .value("leapfrog", Integrator::leapfrog);
    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("dt", &Trajectory::dt)
        .def_readonly("integrator", &Trajectory::integrator)
        .def_readonly("states", &Trajectory::states);

    m.def("hamiltonian", &hamiltonian);
    m.def("lagrangian", &lagrangian);
    m.def("step", &step, py::arg("state"), py::arg("params"), py::arg("dt"), py::arg("method"));
    m.def("simulate", &simulate, py::arg("initial"), py::arg("params"), py::arg("dt"), py::arg("n_steps"),
          py::arg("method"));
    m.def("analytic_oscillator", &analytic_oscillator, py::arg("t"), py::arg("initial"), py::arg("params"));
    m.def("ellipse_residual", &ellipse_residual);
}

void bind_reports(py::module_& m) {
    // Report functions return the JSON text the CLI prints for --json.
    m.def(
        "run_identities",
        [](long samples, std::uint64_t seed, double range) { return report_text(cli::run_identities({samples, seed, range})); },
        py::arg("samples") = 1000, py::arg("seed") = 42, py::arg("range") = 10.0);
    m.def(
        "run_intersect",
        [](const Vec2& a, const Vec2& u, const Vec2& b, const Vec2& v) {
            return report_text(cli::run_intersect({a, u, b, v}));
        },
        py::arg("a"), py::arg("u"), py::arg("b"), py::arg("v"));
    m.def(
        "run_tangents",
        [](const Vec2& c1, double r1, const Vec2& c2, double r2) {
            return report_text(cli::run_tangents({c1, r1, c2, r2}));
        },
        py::arg("c1"), py::arg("r1"), py::arg("c2"), py::arg("r2"));
    m.def(
        "run_crank",
        [](double length, const Vec2& pivot, double phi_dot, double from, double to, int steps, bool degrees) {
            return report_text(cli::run_crank({length, pivot, phi_dot, from, to, steps, degrees}));
        },
        py::arg("length"), py::arg("pivot"), py::arg("phi_dot"), py::arg("phi_start"), py::arg("phi_end"),
        py::arg("steps"), py::arg("degrees") = false);
    m.def(
        "run_oscillator",
        [](double mass, double stiffness, double q0, double p0, double dt, long steps, const std::string& method) {
            return report_text(
                cli::run_oscillator({mass, stiffness, q0, p0, dt, steps, parse_integrator(method)}));
        },
        py::arg("mass"), py::arg("stiffness"), py::arg("q0"), py::arg("p0"), py::arg("dt"), py::arg("steps"),
        py::arg("method") = "leapfrog");
    m.def(
        "rerun", [](const std::string& report_json) { return report_text(replay(report_json)); },
        "Replays a report from its input echo.");
    m.def(
        "report_csv", [](const std::string& report_json) { return cli::to_csv(replay(report_json)); },
        "CSV rows of the run described by a report.");
    m.def(
        "report_svg", [](const std::string& report_json) { return cli::to_svg(replay(report_json)); },
        "SVG plot of the run described by a report.");
    m.def(
        "cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "symplane");
            std::ostringstream out, err;
            const int code = cli::run_command_line(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
    m.def("exit_code_for", [](const std::string& code) {
        for (int i = 0; i <= static_cast<int>(ErrorCode::InvalidStep); ++i) {
            const auto c = static_cast<ErrorCode>(i);
            if (to_string(c) == code) return cli::exit_code_for(c);
        }
        throw Error(ErrorCode::InvalidArgument, "unknown error code '" + code + "'");
    });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Planar symplectic algebra, constructions, crank kinematics and oscillator integrators.";

    static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object instance = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
            instance.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type.ptr(), instance.ptr());
        }
    });

    bind_core(m);
    bind_geometry(m);
    bind_kinematics(m);
    bind_dynamics(m);
    bind_reports(m);
}
