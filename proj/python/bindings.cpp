#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polargap/backlund.hpp"
#include "polargap/errors.hpp"
#include "polargap/factory.hpp"
#include "polargap/profile.hpp"
#include "polargap/spectral.hpp"
#include "polargap/verify.hpp"

namespace py = pybind11;
using namespace polargap;

namespace {

std::vector<double> edges(const Density& d, const std::string& form, double lambda_max) {
  const double top = lambda_max > 0.0 ? lambda_max : spectral::default_lambda_max(d.band_edges);
  const int n = static_cast<int>(d.band_edges.size());
  if (form == "string") return spectral::band_edges(spectral::PeriodicOperator::string(d), top, n).edges;
  if (form != "schrodinger") throw Error(ErrorCode::invalid_argument, "form must be schrodinger or string");
  const auto u = hierarchy::liouville_potential(d.R, d.period_y, d.band_edges);
  return spectral::band_edges(spectral::PeriodicOperator::schrodinger(u), top, n).edges;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite-gap densities of the polar operator";

  py::register_exception<Error>(m, "PolargapError", PyExc_RuntimeError);

  py::class_<elliptic::LatticeParams>(m, "Lattice")
      .def(py::init([](double e1, double e2, double e3) { return elliptic::lattice_from_roots(e1, e2, e3); }),
           py::arg("e1"), py::arg("e2"), py::arg("e3"))
      .def_readonly("e1", &elliptic::LatticeParams::e1)
      .def_readonly("e2", &elliptic::LatticeParams::e2)
      .def_readonly("e3", &elliptic::LatticeParams::e3)
      .def_readonly("g2", &elliptic::LatticeParams::g2)
      .def_readonly("g3", &elliptic::LatticeParams::g3)
      .def_readonly("omega", &elliptic::LatticeParams::omega)
      .def_readonly("omega_p", &elliptic::LatticeParams::omega_p)
      .def_readonly("eta", &elliptic::LatticeParams::eta)
      .def_readonly("eta_p", &elliptic::LatticeParams::eta_p)
      .def("legendre_residual", &elliptic::LatticeParams::legendre_residual)
      .def("wp", [](const elliptic::LatticeParams& L, elliptic::cplx z) { return elliptic::wp(z, L); })
      .def("wp_prime", [](const elliptic::LatticeParams& L, elliptic::cplx z) { return elliptic::wp_prime(z, L); })
      .def("zeta", [](const elliptic::LatticeParams& L, elliptic::cplx z) { return elliptic::zeta_w(z, L); });

  py::class_<Density>(m, "Density")
      .def_readonly("name", &Density::name)
      .def_property_readonly("family", [](const Density& d) { return std::string(to_string(d.family)); })
      .def_property_readonly("smoothness", [](const Density& d) { return std::string(to_string(d.smoothness)); })
      .def_readonly("branch", &Density::branch)
      .def_readonly("period_x", &Density::period_x)
      .def_readonly("period_y", &Density::period_y)
      .def_readonly("band_edges", &Density::band_edges)
      .def_readonly("zeros", &Density::zeros)
      .def_readonly("poles", &Density::poles)
      .def("R", &Density::r, py::arg("y"))
      .def("X", &Density::x, py::arg("y"))
      .def("R_derivative", [](const Density& d, double y, int k) { return d.R(y, k).derivative(k); }, py::arg("y"),
           py::arg("k"));

  m.def(
      "density",
      [](const std::string& family, const std::string& branch, double e1, double e2, double e3, double gamma) {
        return make_density(family, branch, elliptic::lattice_from_roots(e1, e2, e3), gamma);
      },
      py::arg("family"), py::arg("branch") = "3", py::arg("e1") = 1.0, py::arg("e2") = 0.0, py::arg("e3") = -1.0,
      py::arg("gamma") = 1.0 / 3.0);

  m.def("invert_x", [](const Density& d, double x) { return profile::invert_x(d, x); }, py::arg("density"),
        py::arg("x"));
  m.def(
      "sample",
      [](const Density& d, double lo, double hi, int n, double exclusion) {
        std::vector<std::tuple<double, double, double>> out;
        for (const auto& r : profile::sample(d, {lo, hi, n}, exclusion)) out.emplace_back(r.x, r.r, r.y);
        return out;
      },
      py::arg("density"), py::arg("lo"), py::arg("hi"), py::arg("n"), py::arg("exclusion") = 0.0);

  m.def("band_edges", &edges, py::arg("density"), py::arg("form") = "schrodinger", py::arg("lambda_max") = 0.0);

  m.def(
      "backlund",
      [](const Density& d) {
        const auto p = backlund::backlund_density(d);
        py::dict out;
        out["b"] = p.b;
        out["alpha_hat"] = p.alpha_hat;
        out["coefficients"] = p.coefficients;
        out["fit_residual"] = p.fit_residual;
        out["product_variation"] = p.product_variation;
        out["target"] = p.target;
        return out;
      },
      py::arg("density"));

  m.def(
      "cusp_exponent", [](const Density& d, std::size_t index) { return backlund::cusp_exponent_at_zero(d, index).exponent; },
      py::arg("density"), py::arg("index") = 0);

  m.def("derivative_residual", &verify::derivative_residual, py::arg("density"), py::arg("n") = 200);

  m.def(
      "verify_json",
      [](double e1, double e2, double e3, const std::string& family, bool mutate_a3) {
        verify::RunConfig c;
        c.e1 = e1;
        c.e2 = e2;
        c.e3 = e3;
        c.family = family;
        c.tol_scale = verify::Tolerances::env_scale();
        c.tol = verify::Tolerances{}.scaled(c.tol_scale);
        c.mutate_a3 = mutate_a3;
        py::gil_scoped_release release;
        return verify::to_json(verify::run_verify(c));
      },
      py::arg("e1") = 1.0, py::arg("e2") = 0.0, py::arg("e3") = -1.0, py::arg("family") = "all",
      py::arg("mutate_a3") = false);
}
