#ifndef WV_SYMMETRY_HPP
#define WV_SYMMETRY_HPP

#include <map>
#include <vector>

#include "wv/linalg.hpp"
#include "wv/system.hpp"

namespace wv {

// Infinitesimal point transformation t -> t + eps*tau, x -> x + eps*xi,
// v -> v + eps*eta^v. Components depend on (t, x) and order-0 variables only.
struct Generator {
  JetExpr tau, xi;
  std::map<DepVar, JetExpr> eta;

  bool operator==(const Generator& o) const;
  std::string str() const;
};

// Evolutionary form P^v = eta^v - tau v_t - xi v_x, one component per
// dependent variable.
struct Characteristic {
  std::map<DepVar, JetExpr> comp;

  JetExpr component(DepVar v) const;
  bool operator==(const Characteristic& o) const = default;
  std::string str() const;
};

Characteristic to_characteristic(const Generator& g, const DiffSystem& sys);

// Frechet derivative of e in direction P: each jet coordinate v_{(i,j)} moves
// by D_t^i D_x^j P^v. Linear in P; commutes with total derivatives.
JetExpr linearize_along(const Characteristic& P, const JetExpr& e);

// Determining-equation residuals: on-shell reduction of the linearization of
// each (non-induced) equation residual. All zero iff P is a symmetry.
std::vector<JetExpr> symmetry_residual(const DiffSystem& sys,
                                       const Characteristic& P);

// Commutator of vector fields on (t, x, depvars)-space.
Generator lie_bracket(const Generator& a, const Generator& b);

// Inherited point symmetry of the scalar equation: P^p = D_t P^v / c^2
// (layer 1) or D_t^2 P^w / c^2 (layer 2), reduced modulo the combined
// degenerate-parameter potential system. Throws if potential coordinates
// survive the reduction (non-projectable characteristic).
JetExpr project_pot2(const Characteristic& P, int layer,
                     const FSpec& f = FSpec::generic());

// Bounded search ansatz: P^v = sum of t^a x^b (prod u^e) * {1, v_t, v_x} with
// unknown rational coefficients; a <= deg_t, b <= deg_x, total dependent-
// variable degree <= deg_dep.
struct SymmetryAnsatz {
  int deg_t = 1;
  int deg_x = 1;
  int deg_dep = 1;
  size_t guard = 2000;  // max unknown count
};

std::vector<Characteristic> symmetry_search(const DiffSystem& sys,
                                            const SymmetryAnsatz& a);

// Coefficient rows of the exact linear system "sum_k a_k exprs[k] == 0
// identically": one row per (jet monomial, parameter monomial) pair, with
// denominators cleared rowwise. Shared by the symmetry and multiplier
// searches.
RatMat split_linear_system(const std::vector<JetExpr>& exprs);

}  // namespace wv

#endif
