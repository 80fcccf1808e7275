#include "wv/system.hpp"

#include <stdexcept>

namespace wv {

namespace {

JetExpr C(DepVar dv, int ti = 0, int xi = 0) { return JetExpr::coord(dv, ti, xi); }
JetExpr P(Param p) { return JetExpr::param(p); }

JetExpr c2() { return P(Param::c) * P(Param::c); }

// f^(order) applied through the family (opaque symbol when generic).
JetExpr F(const FSpec& f, int order, const JetExpr& arg) {
  return fspec_apply(f, FuncBase::f, order, arg);
}

// Residuals follow the orientation used in the multiplier relations:
// rhs - leading for the potential equations, and the beta-scaled form
// f'(p)p_tt + f''(p)p_t^2 - beta p_txx - c^2 p_xx for the main equation.
Equation solved(JetCoord lead, const JetExpr& rhs, bool induced = false) {
  Equation eq;
  eq.leading = lead;
  eq.solved_rhs = rhs;
  eq.residual = rhs - JetExpr::coord(lead);
  eq.induced = induced;
  return eq;
}

// The main equation's reduction rule p_txx = (f'(p)p_tt + f''(p)p_t^2 - c^2 p_xx)/beta.
// Leading coefficient beta is a nonzero constant, so reduction never divides
// by a function of p.
Equation westervelt_rule(const FSpec& f, bool induced) {
  JetExpr p = C(DepVar::p);
  JetExpr num = F(f, 1, p) * C(DepVar::p, 2, 0) +
                F(f, 2, p) * C(DepVar::p, 1, 0) * C(DepVar::p, 1, 0) -
                c2() * C(DepVar::p, 0, 2);
  Equation eq = solved({DepVar::p, 1, 2}, num / P(Param::beta), induced);
  eq.residual = num - P(Param::beta) * C(DepVar::p, 1, 2);
  return eq;
}

}  // namespace

std::vector<JetExpr> DiffSystem::residuals() const {
  std::vector<JetExpr> out;
  for (const auto& eq : equations)
    if (!eq.induced) out.push_back(eq.residual);
  return out;
}

DiffSystem build_westervelt(const FSpec& f) {
  DiffSystem sys;
  sys.name = "westervelt";
  sys.vars = {DepVar::p};
  sys.equations = {westervelt_rule(f, /*induced=*/false)};
  sys.nondegeneracy = {"beta != 0", "c != 0", "f'' != 0"};
  return sys;
}

DiffSystem build_pot1_layer1(const FSpec& f) {
  DiffSystem sys;
  sys.name = "pot1.l1";
  sys.vars = {DepVar::p, DepVar::u};
  JetExpr p = C(DepVar::p);
  sys.equations = {
      solved({DepVar::u, 0, 1},
             F(f, 1, p) * C(DepVar::p, 1, 0) - P(Param::mu) * C(DepVar::p, 0, 2)),
      solved({DepVar::u, 1, 0},
             c2() * C(DepVar::p, 0, 1) +
                 (P(Param::beta) - P(Param::mu)) * C(DepVar::p, 1, 1)),
      // Cross-derivative compatibility D_t(u_x) = D_x(u_t) is the main
      // equation; carried as an induced reduction rule.
      westervelt_rule(f, /*induced=*/true),
  };
  sys.nondegeneracy = {"beta != 0", "c != 0", "f'' != 0"};
  return sys;
}

DiffSystem build_pot1_layer2(const FSpec& f) {
  DiffSystem sys;
  sys.name = "pot1.l2";
  sys.vars = {DepVar::p, DepVar::u, DepVar::v, DepVar::w};
  JetExpr p = C(DepVar::p);
  sys.equations = {
      solved({DepVar::v, 0, 1}, F(f, 0, p)),
      solved({DepVar::v, 1, 0}, P(Param::mu) * C(DepVar::p, 0, 1) + C(DepVar::u)),
      solved({DepVar::w, 1, 0},
             c2() * p + (P(Param::beta) - P(Param::mu) - P(Param::sigma)) *
                            C(DepVar::p, 1, 0)),
      solved({DepVar::w, 0, 1},
             -P(Param::sigma) * C(DepVar::p, 0, 1) + C(DepVar::u)),
      // The first-layer u equations are cross-derivative consequences of the
      // four equations above; carried as induced reduction rules.
      solved({DepVar::u, 0, 1},
             F(f, 1, p) * C(DepVar::p, 1, 0) - P(Param::mu) * C(DepVar::p, 0, 2),
             /*induced=*/true),
      solved({DepVar::u, 1, 0},
             c2() * C(DepVar::p, 0, 1) +
                 (P(Param::beta) - P(Param::mu)) * C(DepVar::p, 1, 1),
             /*induced=*/true),
      westervelt_rule(f, /*induced=*/true),
  };
  sys.nondegeneracy = {"beta != 0", "c != 0", "f'' != 0"};
  return sys;
}

DiffSystem build_pot2_layer1(const FSpec& f) {
  DiffSystem sys;
  sys.name = "pot2.l1";
  sys.vars = {DepVar::p, DepVar::v};
  JetExpr p = C(DepVar::p);
  // Equation order fixes the multiplier slot order: Q = (Q^p, Q^v).
  sys.equations = {
      solved({DepVar::v, 0, 2},
             F(f, 1, p) * C(DepVar::p, 1, 0) - P(Param::beta) * C(DepVar::p, 0, 2)),
      solved({DepVar::v, 1, 0}, c2() * p),
      westervelt_rule(f, /*induced=*/true),
  };
  sys.nondegeneracy = {"beta != 0", "c != 0", "f'' != 0"};
  return sys;
}

namespace {

// Potential equation for v alone: f(v_t/c^2)_tt - beta v_txx/c^2 = v_xx ... in
// solved form v_txx = (c^2/beta) (f'(v_t/c^2) v_tt / c^2 - v_xx).
Equation potential_v_rule(const FSpec& f) {
  JetExpr vt_over_c2 = C(DepVar::v, 1, 0) / c2();
  JetExpr rhs =
      (F(f, 1, vt_over_c2) * C(DepVar::v, 2, 0) / c2() - C(DepVar::v, 0, 2)) *
      c2() / JetExpr::param(Param::beta);
  return solved({DepVar::v, 1, 2}, rhs, /*induced=*/true);
}

}  // namespace

DiffSystem build_pot2_layer2(const FSpec& f) {
  DiffSystem sys;
  sys.name = "pot2.l2";
  sys.vars = {DepVar::v, DepVar::w};
  JetExpr vt_over_c2 = C(DepVar::v, 1, 0) / c2();
  // Equation order fixes the multiplier slot order: Q = (Q^v, Q^w).
  sys.equations = {
      solved({DepVar::w, 0, 2},
             F(f, 0, vt_over_c2) -
                 (P(Param::beta) / c2()) * C(DepVar::v, 0, 2)),
      solved({DepVar::w, 1, 0}, C(DepVar::v)),
      potential_v_rule(f),
  };
  sys.nondegeneracy = {"beta != 0", "c != 0", "f'' != 0"};
  return sys;
}

DiffSystem build_pot2_full(const FSpec& f) {
  DiffSystem sys;
  sys.name = "pot2.full";
  sys.vars = {DepVar::p, DepVar::v, DepVar::w};
  JetExpr p = C(DepVar::p);
  JetExpr vt_over_c2 = C(DepVar::v, 1, 0) / c2();
  sys.equations = {
      solved({DepVar::w, 0, 2},
             F(f, 0, vt_over_c2) -
                 (P(Param::beta) / c2()) * C(DepVar::v, 0, 2)),
      solved({DepVar::w, 1, 0}, C(DepVar::v)),
      solved({DepVar::v, 0, 2},
             F(f, 1, p) * C(DepVar::p, 1, 0) - P(Param::beta) * C(DepVar::p, 0, 2)),
      solved({DepVar::v, 1, 0}, c2() * p),
      westervelt_rule(f, /*induced=*/true),
  };
  sys.nondegeneracy = {"beta != 0", "c != 0", "f'' != 0"};
  return sys;
}

DiffSystem system_by_name(const std::string& name, const FSpec& f) {
  if (name == "westervelt") return build_westervelt(f);
  if (name == "pot1.l1") return build_pot1_layer1(f);
  if (name == "pot1.l2") return build_pot1_layer2(f);
  if (name == "pot2.l1") return build_pot2_layer1(f);
  if (name == "pot2.l2") return build_pot2_layer2(f);
  if (name == "pot2.full") return build_pot2_full(f);
  throw std::invalid_argument("unknown system '" + name + "'");
}

namespace {

const JetExpr& derived_rule(const DiffSystem& sys, size_t eq_idx, int dt, int dx) {
  auto key = std::make_tuple(eq_idx, dt, dx);
  auto it = sys.rule_cache.find(key);
  if (it != sys.rule_cache.end()) return it->second;
  JetExpr rhs;
  if (dt > 0)
    rhs = derived_rule(sys, eq_idx, dt - 1, dx).total_derivative(Indep::t);
  else if (dx > 0)
    rhs = derived_rule(sys, eq_idx, dt, dx - 1).total_derivative(Indep::x);
  else
    rhs = sys.equations[eq_idx].solved_rhs;
  return sys.rule_cache.emplace(key, std::move(rhs)).first->second;
}

}  // namespace

JetExpr reduce_on_solutions(const DiffSystem& sys, const JetExpr& e) {
  JetExpr cur = e;
  constexpr int kGuard = 200;
  for (int iter = 0; iter < kGuard; ++iter) {
    std::set<JetCoord> used;
    cur.collect_coords(used);
    std::map<JetCoord, JetExpr> subs;
    for (const auto& j : used) {
      for (size_t i = 0; i < sys.equations.size(); ++i) {
        const auto& lead = sys.equations[i].leading;
        if (j.dv == lead.dv && j.t_order >= lead.t_order &&
            j.x_order >= lead.x_order) {
          subs.emplace(
              j, derived_rule(sys, i, j.t_order - lead.t_order,
                              j.x_order - lead.x_order));
          break;
        }
      }
    }
    if (subs.empty()) return cur;
    cur = cur.substitute(subs);
  }
  throw std::runtime_error("reduce_on_solutions: order bound exceeded for " +
                           sys.name);
}

}  // namespace wv
