#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fracspec/cli.hpp"
#include "fracspec/errors.hpp"
#include "fracspec/glweights.hpp"
#include "fracspec/json_io.hpp"
#include "fracspec/spectra.hpp"
#include "fracspec/specfun.hpp"
#include "fracspec/szego.hpp"
#include "fracspec/toeplitz.hpp"

namespace py = pybind11;
using namespace fracspec;

namespace {

py::array_t<double> to_numpy(const DenseMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.size());
  py::array_t<double> out({n, n});
  auto view = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i) {
    for (py::ssize_t j = 0; j < n; ++j) view(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  return out;
}

DenseMatrix from_numpy(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw DomainError("expected a square 2-d array");
  const auto n = static_cast<std::size_t>(a.shape(0));
  DenseMatrix m(n);
  auto view = a.unchecked<2>();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j));
  }
  return m;
}

py::object json_to_py(const nlohmann::json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

}  // namespace

PYBIND11_MODULE(_fracspec, m) {
  m.doc() = "Toeplitz discretization of the fractional Schroedinger operator";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  // special functions
  m.def("log_gamma", &specfun::log_gamma, py::arg("x"));
  m.def("digamma", &specfun::digamma, py::arg("x"));
  m.def("lobachevsky", &specfun::lobachevsky, py::arg("x"));
  m.def("catalan", &specfun::catalan);
  m.def(
      "integrate",
      [](const std::function<double(double)>& f, double a, double b, double abs_tol, double rel_tol,
         int max_depth, bool singular_left, bool singular_right) {
        specfun::QuadratureSpec spec{abs_tol, rel_tol, max_depth, singular_left, singular_right};
        return specfun::integrate(f, a, b, spec);
      },
      py::arg("f"), py::arg("a"), py::arg("b"), py::arg("abs_tol") = 1e-12,
      py::arg("rel_tol") = 1e-12, py::arg("max_depth") = 60, py::arg("singular_left") = false,
      py::arg("singular_right") = false);

  // weights
  m.def(
      "weights", [](double alpha, std::size_t count) { return glweights::weights(alpha, count).values; },
      py::arg("alpha"), py::arg("count"));
  m.def("weight_binomial", &glweights::weight_binomial, py::arg("alpha"), py::arg("n"));
  m.def("weight_partial_sum", &glweights::weight_partial_sum, py::arg("alpha"), py::arg("N"));

  // operator assembly and symbol
  py::class_<toeplitz::StableParams>(m, "StableParams")
      .def(py::init<double, double, double, double, std::size_t>(), py::arg("alpha"),
           py::arg("beta"), py::arg("k_alpha"), py::arg("length"), py::arg("n"))
      .def_static("unit", &toeplitz::StableParams::unit, py::arg("alpha"), py::arg("beta"),
                  py::arg("n"))
      .def_property_readonly("alpha", &toeplitz::StableParams::alpha)
      .def_property_readonly("beta", &toeplitz::StableParams::beta)
      .def_property_readonly("n", &toeplitz::StableParams::n)
      .def_property_readonly("epsilon", &toeplitz::StableParams::epsilon)
      .def_property_readonly("scale", &toeplitz::StableParams::scale);

  m.def(
      "assemble",
      [](const toeplitz::StableParams& p, bool physical) {
        const auto op = toeplitz::assemble(p);
        return to_numpy(physical ? op.physical_dense() : op.dense());
      },
      py::arg("params"), py::arg("physical") = false);
  m.def(
      "kernel",
      [](const toeplitz::StableParams& p) {
        const auto op = toeplitz::assemble(p);
        return std::vector<double>(op.kernel().begin(), op.kernel().end());
      },
      py::arg("params"));
  m.def(
      "symbol_curve",
      [](const toeplitz::StableParams& p, std::size_t points, bool shifted) {
        const auto samples = toeplitz::symbol_curve(p, points, shifted);
        py::array_t<double> out({static_cast<py::ssize_t>(samples.size()), py::ssize_t{3}});
        auto view = out.mutable_unchecked<2>();
        for (std::size_t i = 0; i < samples.size(); ++i) {
          const auto r = static_cast<py::ssize_t>(i);
          view(r, 0) = samples[i].theta;
          view(r, 1) = samples[i].u;
          view(r, 2) = samples[i].v;
        }
        return out;
      },
      py::arg("params"), py::arg("points"), py::arg("shifted") = false);
  m.def(
      "symbol_closed",
      [](const toeplitz::StableParams& p, double theta, bool shifted) {
        const auto s = toeplitz::symbol_closed(p, theta, shifted);
        return py::make_tuple(s.u, s.v);
      },
      py::arg("params"), py::arg("theta"), py::arg("shifted") = false);
  m.def(
      "symbol_period",
      [](long p, long q) {
        const auto r = toeplitz::symbol_period(p, q);
        return py::make_tuple(r.n1, r.period);
      },
      py::arg("p"), py::arg("q"));

  // spectra
  m.def(
      "jacobi_eigen",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a, double tol) {
        const auto r = spectra::jacobi_eigen(from_numpy(a), tol);
        return py::make_tuple(r.values, to_numpy(r.vectors));
      },
      py::arg("matrix"), py::arg("tol") = 1e-14);
  m.def(
      "lu_logdet",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
        const auto r = spectra::lu_logdet(from_numpy(a));
        return py::make_tuple(r.sign, r.log_abs);
      },
      py::arg("matrix"));
  m.def(
      "spectral_report",
      [](const toeplitz::StableParams& p) { return json_to_py(to_json(spectra::spectral_report(p))); },
      py::arg("params"));

  // Szego coefficients
  m.def("logf_coeff_quadrature",
        [](double alpha, std::size_t k, double scale, bool shifted) {
          return szego::logf_coeff_quadrature(alpha, k, scale, shifted);
        },
        py::arg("alpha"), py::arg("k"), py::arg("scale") = 1.0, py::arg("shifted") = true);
  m.def("logf_coeff0_closed", &szego::logf_coeff0_closed, py::arg("alpha"), py::arg("scale") = 1.0);
  m.def("logf_coeff_closed", &szego::logf_coeff_closed, py::arg("alpha"), py::arg("k"));
  m.def(
      "szego_report",
      [](double alpha, double scale, std::size_t kmax, const std::string& method, bool shifted,
         std::size_t m_cut) {
        const auto coeffs =
            szego::compute_coefficients(alpha, scale, kmax, szego::method_from_string(method), shifted);
        return json_to_py(to_json(coeffs, szego::szego_constants(coeffs, m_cut)));
      },
      py::arg("alpha"), py::arg("scale") = 1.0, py::arg("kmax") = 20,
      py::arg("method") = "quadrature", py::arg("shifted") = true, py::arg("m") = 0);
  m.def(
      "asymptote_study",
      [](double alpha, const std::vector<std::size_t>& n_list) {
        py::list rows;
        for (const auto& r : szego::asymptote_study(alpha, n_list)) {
          py::dict d;
          d["n"] = r.n;
          d["log_det"] = r.log_det;
          d["n_c0"] = r.n_c0;
          d["residual"] = r.residual;
          d["diag"] = r.diag;
          rows.append(d);
        }
        return rows;
      },
      py::arg("alpha"), py::arg("n_list"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"fracspec"};
        full.insert(full.end(), args.begin(), args.end());
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(full, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
