#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>
#include <vector>

#include "mnormlab/eigen.hpp"
#include "mnormlab/error.hpp"
#include "mnormlab/farey.hpp"
#include "mnormlab/hadamard.hpp"
#include "mnormlab/integrand.hpp"
#include "mnormlab/matrix_core.hpp"
#include "mnormlab/specfun.hpp"

namespace py = pybind11;
using namespace mnormlab;

namespace {

Integrand integrand_from(py::object obj) {
  if (py::isinstance<Integrand>(obj)) return obj.cast<Integrand>();
  if (py::isinstance<py::str>(obj)) {
    return integrands::by_name(obj.cast<std::string>());
  }
  if (PyCallable_Check(obj.ptr())) {
    auto fn = obj.cast<std::function<double(double)>>();
    return Integrand{std::move(fn), py::str(py::getattr(obj, "__name__", py::str("callable")))};
  }
  throw py::type_error("expected an Integrand, a preset name, or a callable");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entrywise m-norm limits of function-sampled symmetric matrices.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<IndexError>(m, "MatrixIndexError", base.ptr());
  py::register_exception<EvaluationError>(m, "EvaluationError", base.ptr());
  py::register_exception<QuadratureError>(m, "QuadratureError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());

  py::class_<Integrand>(m, "Integrand")
      .def(py::init([](std::function<double(double)> fn, std::string label) {
             return Integrand{std::move(fn), std::move(label)};
           }),
           py::arg("fn"), py::arg("label") = "custom")
      .def_readonly("label", &Integrand::label)
      .def("__call__", &Integrand::operator())
      .def("__repr__", [](const Integrand& f) { return "<Integrand " + f.label + ">"; });

  m.def("integrand", &integrands::by_name, py::arg("name"),
        "Preset integrand: exp, lngamma, identity or const1.");

  // matrix_core
  py::class_<SampledMatrixSpec>(m, "SampledMatrixSpec")
      .def(py::init([](py::object f, std::size_t n) {
             return SampledMatrixSpec(integrand_from(std::move(f)), n);
           }),
           py::arg("integrand"), py::arg("order"))
      .def_property_readonly("order", &SampledMatrixSpec::order)
      .def_property_readonly("integrand", &SampledMatrixSpec::integrand);

  py::class_<NormReport>(m, "NormReport")
      .def_readonly("order", &NormReport::order)
      .def_readonly("exponent", &NormReport::exponent)
      .def_readonly("raw_norm_power", &NormReport::raw_norm_power)
      .def_readonly("normalized", &NormReport::normalized)
      .def_readonly("predicted_limit", &NormReport::predicted_limit)
      .def_readonly("abs_error", &NormReport::abs_error);

  m.def("matrix_entry", &matrix_entry, py::arg("spec"), py::arg("i"), py::arg("j"));
  m.def("norm_power", &norm_power, py::arg("spec"), py::arg("m"));
  m.def("norm_report", &norm_report, py::arg("spec"), py::arg("m"), py::arg("predicted"));
  m.def(
      "predict_limit",
      [](py::object f, double mm, double tol) {
        QuadratureOptions q;
        q.abs_tol = tol;
        return predict_limit(integrand_from(std::move(f)), mm, q);
      },
      py::arg("integrand"), py::arg("m"), py::arg("tol") = 1e-10);
  m.def(
      "weighted_cesaro",
      [](const std::vector<double>& terms) { return weighted_cesaro(terms); },
      py::arg("terms"));
  m.def(
      "convergence_table",
      [](py::object f, double mm, const std::vector<std::size_t>& orders) {
        return convergence_table(integrand_from(std::move(f)), mm, orders);
      },
      py::arg("integrand"), py::arg("m"), py::arg("orders"));

  // specfun
  m.def("ln_gamma", &specfun::ln_gamma, py::arg("x"));
  m.def("euler_reflection_residual", &specfun::euler_reflection_residual, py::arg("s"));
  m.def("duplication_residual", &specfun::duplication_residual, py::arg("z"));
  m.def("sine_product_odd_residual", &specfun::sine_product_odd_residual, py::arg("n"));
  m.def("sine_product_even_residual", &specfun::sine_product_even_residual, py::arg("n"));
  m.def("gamma_row_log_product", &specfun::gamma_row_log_product, py::arg("k"));
  m.def("gamma_row_log_product_closed", &specfun::gamma_row_log_product_closed, py::arg("k"));
  m.def("gamma_integral_closed_partial", &specfun::gamma_integral_closed_partial, py::arg("n"));
  m.def("gamma_integral_via_matrix", &specfun::gamma_integral_via_matrix, py::arg("n"));

  // farey
  m.def(
      "totient_sieve",
      [](std::uint64_t x) {
        const auto t = farey::totient_sieve(x);
        std::vector<std::uint32_t> out;
        out.reserve(x);
        for (std::uint64_t n = 1; n <= x; ++n) out.push_back(t[n]);
        return out;
      },
      py::arg("x"), "phi(1), ..., phi(x)");
  m.def("phi_summatory", &farey::phi_summatory, py::arg("x"));
  m.def(
      "farey_sequence",
      [](std::uint64_t x) {
        std::vector<std::tuple<std::int64_t, std::int64_t>> out;
        for (const auto& r : farey::farey_sequence(x).fractions) {
          out.emplace_back(r.num, r.den);
        }
        return out;
      },
      py::arg("x"), "Ascending (numerator, denominator) pairs of F_x.");
  m.def(
      "weyl_average",
      [](py::object f, std::uint64_t x) {
        return farey::weyl_average(integrand_from(std::move(f)), x);
      },
      py::arg("integrand"), py::arg("x"));
  m.def("coprime_density", &farey::coprime_density, py::arg("n"));

  // eigen
  py::class_<eigen::EigenDecomposition>(m, "EigenDecomposition")
      .def_readonly("eigenvalues", &eigen::EigenDecomposition::eigenvalues)
      .def_readonly("sweeps_used", &eigen::EigenDecomposition::sweeps_used)
      .def_readonly("off_diag_residual", &eigen::EigenDecomposition::off_diag_residual);
  py::class_<eigen::SpectralSums>(m, "SpectralSums")
      .def_readonly("trace", &eigen::SpectralSums::trace)
      .def_readonly("sum_sq", &eigen::SpectralSums::sum_sq)
      .def_readonly("normalized_sum_sq", &eigen::SpectralSums::normalized_sum_sq)
      .def_readonly("sweeps_used", &eigen::SpectralSums::sweeps_used);
  m.def(
      "jacobi_eigenvalues",
      [](const std::vector<std::vector<double>>& rows, double tol, int max_sweeps) {
        const std::size_t n = rows.size();
        eigen::DenseSymmetric a(n);
        for (std::size_t i = 0; i < n; ++i) {
          if (rows[i].size() != n) throw PreconditionError("matrix must be square");
          for (std::size_t j = 0; j <= i; ++j) {
            if (rows[i][j] != rows[j][i]) throw PreconditionError("matrix must be symmetric");
            a.set(i, j, rows[i][j]);
          }
        }
        return eigen::jacobi_eigenvalues(a, {tol, max_sweeps});
      },
      py::arg("matrix"), py::arg("tol") = 1e-12, py::arg("max_sweeps") = 64);
  m.def(
      "spectral_sum_report",
      [](py::object f, std::size_t n) {
        return eigen::spectral_sum_report(integrand_from(std::move(f)), n);
      },
      py::arg("integrand"), py::arg("n"));

  // hadamard
  py::class_<hadamard::SignMatrix>(m, "SignMatrix")
      .def(py::init([](const std::vector<std::vector<int>>& rows) {
        const std::size_t n = rows.size();
        std::vector<std::int8_t> e;
        e.reserve(n * n);
        for (const auto& r : rows) {
          if (r.size() != n) throw PreconditionError("matrix must be square");
          for (int v : r) e.push_back(static_cast<std::int8_t>(v == 1 ? 1 : (v == -1 ? -1 : 0)));
        }
        return hadamard::SignMatrix(n, std::move(e));
      }))
      .def_property_readonly("order", &hadamard::SignMatrix::order)
      .def("to_list", [](const hadamard::SignMatrix& s) {
        std::vector<std::vector<int>> out(s.order(), std::vector<int>(s.order()));
        for (std::size_t i = 0; i < s.order(); ++i)
          for (std::size_t j = 0; j < s.order(); ++j) out[i][j] = s(i, j);
        return out;
      });
  py::class_<hadamard::OscillationReport>(m, "OscillationReport")
      .def_readonly("order", &hadamard::OscillationReport::order)
      .def_readonly("mismatch_count", &hadamard::OscillationReport::mismatch_count)
      .def_readonly("lower_bound", &hadamard::OscillationReport::lower_bound)
      .def_property_readonly("verdict", [](const hadamard::OscillationReport& r) {
        return std::string(hadamard::to_string(r.verdict));
      });
  m.def("sylvester", [](unsigned k) { return hadamard::sylvester(k); }, py::arg("k"));
  m.def("is_hadamard", &hadamard::is_hadamard, py::arg("matrix"));
  m.def("spectral_sum_sq", &hadamard::spectral_sum_sq, py::arg("matrix"));
  m.def("oscillation_bound", &hadamard::oscillation_bound, py::arg("matrix"));
}
