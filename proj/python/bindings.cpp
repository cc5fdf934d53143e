#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qes/catalog.hpp"
#include "qes/potential.hpp"
#include "qes/report.hpp"
#include "qes/verify.hpp"

namespace py = pybind11;
using namespace qes;

namespace {

ParamMap to_params(const std::map<std::string, std::string>& in) {
  ParamMap out;
  for (const auto& [k, v] : in) out[k] = parse_rational(v);
  return out;
}

std::string solve_model(const std::string& model, const std::map<std::string, std::string>& params, int n, int N_extra,
                        double tol) {
  const CatalogEntry& e = catalog_entry(model);
  QesProblem prob = instantiate(model, to_params(params), n);
  RunReport r;
  {
    py::gil_scoped_release release;
    r = run_solve(prob, e.id, {N_extra, tol, e.self_adjoint});
  }
  return report_json(r, false).dump();
}

std::string solve_custom(const std::string& A, const std::string& F, int n, double lo, double hi, bool fill_F3) {
  MasterSpec spec;
  spec.A = parse_coeff_list(A);
  spec.F = parse_coeff_list(F);
  spec.interval = {lo, hi};
  spec.fill_F3 = fill_F3;
  ValidationReport v = validate_spec(spec);
  if (!v.ok()) throw Error(ErrorKind::constraint_violation, v.summary());
  QesProblem prob = solve_constraints(spec, n);
  return report_json(run_solve(prob, "custom"), false).dump();
}

std::string verify(const std::vector<std::string>& models, int trials, std::uint64_t seed, int threads) {
  VerifyOptions opt;
  opt.models = models;
  opt.trials = trials;
  opt.seed = seed;
  opt.threads = threads;
  VerifyReport r;
  {
    py::gil_scoped_release release;
    r = run_verify(opt);
  }
  return verify_json(r, false).dump();
}

std::string potential(const std::string& model, const std::map<std::string, std::string>& params, int n, double t_min,
                      double t_max, int steps, bool closed_form) {
  return profile_json(sample_potential(model, to_params(params), n, t_min, t_max, steps, closed_form)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quasi-exactly solvable operators: exact spectra and Schrodinger potentials";

  py::register_exception<Error>(m, "QesError", PyExc_ValueError);

  m.def("list_models", [](int k) { return catalog_json(k).dump(); }, py::arg("k") = 0);
  m.def("solve", &solve_model, py::arg("model"), py::arg("params"), py::arg("n"), py::arg("N_extra") = 6,
        py::arg("tol") = 1e-12);
  m.def("solve_custom", &solve_custom, py::arg("A"), py::arg("F"), py::arg("n"), py::arg("lo") = 0.0,
        py::arg("hi") = kInf, py::arg("fill_F3") = false);
  m.def("verify", &verify, py::arg("models") = std::vector<std::string>{}, py::arg("trials") = 5,
        py::arg("seed") = 1, py::arg("threads") = 0);
  m.def("potential", &potential, py::arg("model"), py::arg("params"), py::arg("n"), py::arg("t_min"),
        py::arg("t_max"), py::arg("steps") = 100, py::arg("closed_form") = false);
  m.def("closed_form_V", [](const std::string& model, const std::map<std::string, std::string>& params, int n,
                            double t) { return closed_form_V(model, to_params(params), n, t); });
  m.attr("__version__") = "0.1.0";
}
