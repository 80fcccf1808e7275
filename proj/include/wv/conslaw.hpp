#ifndef WV_CONSLAW_HPP
#define WV_CONSLAW_HPP

#include <vector>

#include "wv/symmetry.hpp"
#include "wv/system.hpp"

namespace wv {

// Q . residuals = D_t T + D_x Phi as an off-shell identity; Q has one entry
// per non-induced equation of the system.
struct ConsLaw {
  std::vector<JetExpr> Q;
  JetExpr T;
  JetExpr Phi;
};

// Normal form of Q . residuals - D_t T - D_x Phi; zero certifies the law.
JetExpr divergence_residual(const ConsLaw& law, const DiffSystem& sys);

// Euler-operator images E_v(Q . residuals) for every dependent variable;
// all zero iff Q is a multiplier.
std::vector<JetExpr> multiplier_residual(const std::vector<JetExpr>& Q,
                                         const DiffSystem& sys);

// Search space for multipliers: each component is a sum of
// t^a x^b * (jet monomial) with a <= coeff_deg_t, b <= coeff_deg_x, jet
// coordinates of differential order <= jet_order and monomial degree
// <= jet_degree, with unknown rational coefficients.
struct MultiplierAnsatz {
  int jet_order = 2;
  int jet_degree = 1;
  int coeff_deg_t = 1;
  int coeff_deg_x = 1;
  size_t guard = 4000;
};

std::vector<std::vector<JetExpr>> find_multipliers(const DiffSystem& sys,
                                                   const MultiplierAnsatz& a);

// Density/flux pair for a certified multiplier, found by an undetermined-
// coefficient solve over a bounded term basis and certified afterwards by
// divergence_residual. Throws if the basis cannot represent the law.
ConsLaw flux_reconstruct(const std::vector<JetExpr>& Q, const DiffSystem& sys);

// True iff target lies in the exact rational span of the basis vectors
// (componentwise expressions).
bool in_expr_span(const std::vector<std::vector<JetExpr>>& basis,
                  const std::vector<JetExpr>& target);

}  // namespace wv

#endif
