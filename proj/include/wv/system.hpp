#ifndef WV_SYSTEM_HPP
#define WV_SYSTEM_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "wv/fspec.hpp"

namespace wv {

// One equation in solved form: residual = 0 on solutions, equivalently
// leading = solved_rhs. Induced equations are differential consequences
// (cross-derivative compatibilities) carried only as reduction rules; they
// are not part of the system's residual list.
struct Equation {
  JetExpr residual;
  JetCoord leading;
  JetExpr solved_rhs;
  bool induced = false;
};

// A PDE system in solved form. Equations are ordered by reduction priority:
// potential-variable rules first, then the induced p_txx (or v_txx) rule.
struct DiffSystem {
  std::string name;
  std::vector<DepVar> vars;
  std::vector<Equation> equations;
  std::vector<std::string> nondegeneracy;  // symbol != 0 conditions

  // Residuals of the proper (non-induced) equations, in order.
  std::vector<JetExpr> residuals() const;

  // Cache of derived reduction rules, keyed by (equation, extra t, extra x).
  mutable std::map<std::tuple<size_t, int, int>, JetExpr> rule_cache;
};

DiffSystem build_westervelt(const FSpec& f = FSpec::generic());
// First potential layer: u_x = f'(p)p_t - mu*p_xx, u_t = c^2 p_x + (beta-mu) p_tx.
DiffSystem build_pot1_layer1(const FSpec& f = FSpec::generic());
// Second layer adds v_x = f(p), v_t = mu*p_x + u, w_t = c^2 p + (beta-mu-sigma) p_t,
// w_x = -sigma*p_x + u.
DiffSystem build_pot1_layer2(const FSpec& f = FSpec::generic());
// Degenerate-parameter potential layer: v_xx = f'(p)p_t - beta*p_xx, v_t = c^2 p.
DiffSystem build_pot2_layer1(const FSpec& f = FSpec::generic());
// Its second layer in (v, w): w_xx = f(v_t/c^2) - (beta/c^2) v_xx, w_t = v.
DiffSystem build_pot2_layer2(const FSpec& f = FSpec::generic());
// Combined (p, v, w) system used to reduce projected characteristics.
DiffSystem build_pot2_full(const FSpec& f = FSpec::generic());

// Lookup by CLI name: westervelt | pot1.l1 | pot1.l2 | pot2.l1 | pot2.l2.
DiffSystem system_by_name(const std::string& name,
                          const FSpec& f = FSpec::generic());

// On-shell normal form: substitutes every leading derivative and all its
// total-derivative consequences until none remains. Throws if no fixpoint is
// reached within the iteration guard.
JetExpr reduce_on_solutions(const DiffSystem& sys, const JetExpr& e);

}  // namespace wv

#endif
