#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wv/conslaw.hpp"
#include "wv/fdsim.hpp"
#include "wv/parser.hpp"
#include "wv/verify.hpp"

namespace py = pybind11;
using namespace wv;

namespace {

Indep indep_of(const std::string& s) {
  if (s == "t") return Indep::t;
  if (s == "x") return Indep::x;
  throw std::invalid_argument("independent variable must be 't' or 'x'");
}

DepVar depvar_of(const std::string& s) {
  if (s == "p") return DepVar::p;
  if (s == "u") return DepVar::u;
  if (s == "v") return DepVar::v;
  if (s == "w") return DepVar::w;
  throw std::invalid_argument("dependent variable must be p, u, v or w");
}

Characteristic char_of(const std::map<std::string, std::string>& comps) {
  Characteristic c;
  for (const auto& [v, e] : comps) c.comp[depvar_of(v)] = parse(e);
  return c;
}

std::vector<JetExpr> parse_all(const std::vector<std::string>& xs) {
  std::vector<JetExpr> out;
  for (const auto& s : xs) out.push_back(parse(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact jet-space computer algebra and travelling-wave tools for the "
      "nonlinear acoustic pressure equation f(p)_tt - beta p_xxt = c^2 p_xx";

  py::class_<JetExpr>(m, "Expr")
      .def("__str__", &JetExpr::str)
      .def("__repr__", [](const JetExpr& e) { return "Expr(" + e.str() + ")"; })
      .def("__eq__", [](const JetExpr& a, const JetExpr& b) { return a == b; })
      .def("__add__", [](const JetExpr& a, const JetExpr& b) { return a + b; })
      .def("__sub__", [](const JetExpr& a, const JetExpr& b) { return a - b; })
      .def("__mul__", [](const JetExpr& a, const JetExpr& b) { return a * b; })
      .def("is_zero", &JetExpr::is_zero)
      .def("total_derivative",
           [](const JetExpr& e, const std::string& v) {
             return e.total_derivative(indep_of(v));
           })
      .def("euler", [](const JetExpr& e, const std::string& v) {
        return e.euler(depvar_of(v));
      });

  m.def("parse", [](const std::string& s) { return parse(s); },
        "Parse an expression over t, x, jet coordinates, parameters, f and h");

  py::class_<DiffSystem>(m, "System")
      .def_readonly("name", &DiffSystem::name)
      .def("residuals", &DiffSystem::residuals)
      .def("reduce", [](const DiffSystem& sys, const JetExpr& e) {
        return reduce_on_solutions(sys, e);
      });

  m.def("system", [](const std::string& name) { return system_by_name(name); },
        "Build a system by name: westervelt, pot1.l1, pot1.l2, pot2.l1, "
        "pot2.l2, pot2.full");

  m.def("symmetry_residual",
        [](const DiffSystem& sys,
           const std::map<std::string, std::string>& comps) {
          return symmetry_residual(sys, char_of(comps));
        },
        "Reduced linearized residuals of a characteristic given as "
        "{var: expression}");

  m.def("divergence_residual",
        [](const DiffSystem& sys, const std::vector<std::string>& Q,
           const std::string& T, const std::string& Phi) {
          return divergence_residual({parse_all(Q), parse(T), parse(Phi)}, sys);
        });

  m.def("find_multipliers",
        [](const DiffSystem& sys, int jet_order, int coeff_degree) {
          MultiplierAnsatz a;
          a.jet_order = jet_order;
          a.coeff_deg_t = coeff_degree;
          a.coeff_deg_x = coeff_degree;
          std::vector<std::vector<std::string>> out;
          for (const auto& Q : find_multipliers(sys, a)) {
            std::vector<std::string> row;
            for (const auto& e : Q) row.push_back(e.str());
            out.push_back(std::move(row));
          }
          return out;
        },
        py::arg("system"), py::arg("jet_order") = 2,
        py::arg("coeff_degree") = 1);

  py::class_<TWParams>(m, "ShockParams")
      .def(py::init<>())
      .def_readwrite("c", &TWParams::c)
      .def_readwrite("nu", &TWParams::nu)
      .def_readwrite("beta", &TWParams::beta)
      .def_readwrite("kappa", &TWParams::kappa)
      .def_readwrite("n", &TWParams::n)
      .def_readwrite("U0", &TWParams::U0)
      .def_readwrite("xi0", &TWParams::xi0)
      .def("amplitude", &TWParams::amplitude);

  m.def("shock_profile", &shock_closed_form, py::arg("xi"), py::arg("params"));
  m.def("shock_xi_difference", &quadrature_xi, py::arg("u_from"),
        py::arg("u_to"), py::arg("params"));
  m.def("shock_ode_residual", &residual_check, py::arg("params"),
        py::arg("xis"));

  m.def("verify_all", []() {
    std::vector<std::pair<std::string, bool>> rows;
    for (const auto& r : run_verification(VerifyOptions{}))
      rows.emplace_back(r.id, r.pass);
    return rows;
  });
}
