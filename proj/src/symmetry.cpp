#include "wv/symmetry.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "wv/linalg.hpp"

namespace wv {

bool Generator::operator==(const Generator& o) const {
  if (tau != o.tau || xi != o.xi) return false;
  auto comp_of = [](const std::map<DepVar, JetExpr>& m, DepVar v) {
    auto it = m.find(v);
    return it == m.end() ? JetExpr::zero() : it->second;
  };
  for (int i = 0; i < 4; ++i) {
    DepVar v = static_cast<DepVar>(i);
    if (comp_of(eta, v) != comp_of(o.eta, v)) return false;
  }
  return true;
}

std::string Generator::str() const {
  std::ostringstream os;
  os << "tau=" << tau.str() << "; xi=" << xi.str();
  for (const auto& [v, e] : eta) os << "; eta^" << depvar_name(v) << "=" << e.str();
  return os.str();
}

JetExpr Characteristic::component(DepVar v) const {
  auto it = comp.find(v);
  return it == comp.end() ? JetExpr::zero() : it->second;
}

std::string Characteristic::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : comp) {
    if (!first) os << "; ";
    first = false;
    os << "P^" << depvar_name(v) << " = " << e.str();
  }
  return os.str();
}

Characteristic to_characteristic(const Generator& g, const DiffSystem& sys) {
  Characteristic P;
  for (DepVar v : sys.vars) {
    auto it = g.eta.find(v);
    JetExpr eta = it == g.eta.end() ? JetExpr::zero() : it->second;
    P.comp[v] = eta - g.tau * JetExpr::coord(v, 1, 0) - g.xi * JetExpr::coord(v, 0, 1);
  }
  return P;
}

JetExpr linearize_along(const Characteristic& P, const JetExpr& e) {
  std::set<JetCoord> used;
  e.collect_coords(used);
  // Cache of D_t^i D_x^j P^v, built incrementally.
  std::map<JetCoord, JetExpr> dP;
  std::function<const JetExpr&(JetCoord)> deriv = [&](JetCoord j) -> const JetExpr& {
    auto it = dP.find(j);
    if (it != dP.end()) return it->second;
    JetExpr val;
    if (j.t_order == 0 && j.x_order == 0)
      val = P.component(j.dv);
    else if (j.t_order > 0)
      val = deriv({j.dv, j.t_order - 1, j.x_order}).total_derivative(Indep::t);
    else
      val = deriv({j.dv, 0, j.x_order - 1}).total_derivative(Indep::x);
    return dP.emplace(j, std::move(val)).first->second;
  };
  JetExpr out;
  for (const auto& j : used) out += e.d_coord(j) * deriv(j);
  return out;
}

std::vector<JetExpr> symmetry_residual(const DiffSystem& sys,
                                       const Characteristic& P) {
  std::vector<JetExpr> out;
  for (const auto& eq : sys.equations) {
    if (eq.induced) continue;
    out.push_back(reduce_on_solutions(sys, linearize_along(P, eq.residual)));
  }
  return out;
}

namespace {

JetExpr apply_field(const Generator& g, const JetExpr& h) {
  JetExpr out = g.tau * h.d_explicit(Indep::t) + g.xi * h.d_explicit(Indep::x);
  for (const auto& [v, eta] : g.eta) out += eta * h.d_coord({v, 0, 0});
  return out;
}

}  // namespace

Generator lie_bracket(const Generator& a, const Generator& b) {
  Generator out;
  out.tau = apply_field(a, b.tau) - apply_field(b, a.tau);
  out.xi = apply_field(a, b.xi) - apply_field(b, a.xi);
  std::set<DepVar> vars;
  for (const auto& [v, e] : a.eta) vars.insert(v);
  for (const auto& [v, e] : b.eta) vars.insert(v);
  for (DepVar v : vars) {
    auto get = [&](const Generator& g) {
      auto it = g.eta.find(v);
      return it == g.eta.end() ? JetExpr::zero() : it->second;
    };
    JetExpr e = apply_field(a, get(b)) - apply_field(b, get(a));
    if (!e.is_zero()) out.eta[v] = e;
  }
  return out;
}

JetExpr project_pot2(const Characteristic& P, int layer, const FSpec& f) {
  JetExpr pp;
  if (layer == 1) {
    pp = P.component(DepVar::v).total_derivative(Indep::t);
  } else if (layer == 2) {
    pp = P.component(DepVar::w)
             .total_derivative(Indep::t)
             .total_derivative(Indep::t);
  } else {
    throw std::invalid_argument("project_pot2: layer must be 1 or 2");
  }
  pp = pp / (JetExpr::param(Param::c) * JetExpr::param(Param::c));
  DiffSystem full = build_pot2_full(f);
  pp = reduce_on_solutions(full, pp);
  if (pp.depends_on_var(DepVar::v) || pp.depends_on_var(DepVar::w))
    throw std::domain_error(
        "project_pot2: potential coordinates survive reduction");
  return pp;
}

RatMat split_linear_system(const std::vector<JetExpr>& exprs) {
  size_t K = exprs.size();
  std::map<Monomial, std::vector<Coeff>> by_monomial;
  for (size_t k = 0; k < K; ++k)
    for (const auto& [m, c] : exprs[k].terms()) {
      auto& slot = by_monomial[m];
      if (slot.empty()) slot.resize(K);
      slot[k] = c;
    }
  RatMat rows;
  for (auto& [m, cs] : by_monomial) {
    // Union denominator over the row, then entries become polynomials.
    std::map<ParamPoly, int, decltype([](const ParamPoly& a, const ParamPoly& b) {
               return a.compare(b) < 0;
             })>
        united;
    for (const auto& c : cs)
      for (const auto& [fac, mult] : c.den_factors()) {
        int& m2 = united[fac];
        if (mult > m2) m2 = mult;
      }
    std::vector<ParamPoly> polys(K);
    std::map<ExpVec, size_t> col_of_exp;  // param monomial -> local row id
    for (size_t k = 0; k < K; ++k) {
      ParamPoly e = cs[k].num();
      if (e.is_zero()) continue;
      for (const auto& [fac, mult] : united) {
        int have = 0;
        for (const auto& [f2, m2] : cs[k].den_factors())
          if (f2 == fac) have = m2;
        for (int i = have; i < mult; ++i) e = e * fac;
      }
      polys[k] = e;
      for (const auto& [ev, coeff] : e.terms()) col_of_exp.emplace(ev, 0);
    }
    size_t base = rows.size();
    size_t idx = 0;
    for (auto& [ev, id] : col_of_exp) {
      id = idx++;
      rows.emplace_back(K, Rational(0));
    }
    for (size_t k = 0; k < K; ++k)
      for (const auto& [ev, coeff] : polys[k].terms())
        rows[base + col_of_exp[ev]][k] = coeff;
  }
  return rows;
}

std::vector<Characteristic> symmetry_search(const DiffSystem& sys,
                                            const SymmetryAnsatz& a) {
  // Candidate basis: one nonzero component per element.
  std::vector<Characteristic> basis;
  std::vector<std::vector<int>> dep_exps;  // exponent per sys.vars entry
  std::vector<int> cur(sys.vars.size(), 0);
  std::function<void(size_t, int)> gen = [&](size_t i, int left) {
    if (i == cur.size()) {
      dep_exps.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[i] = e;
      gen(i + 1, left - e);
    }
    cur[i] = 0;
  };
  gen(0, a.deg_dep);
  for (DepVar v : sys.vars) {
    std::vector<JetExpr> jets = {JetExpr::one(), JetExpr::coord(v, 1, 0),
                                 JetExpr::coord(v, 0, 1)};
    for (int at = 0; at <= a.deg_t; ++at)
      for (int ax = 0; ax <= a.deg_x; ++ax)
        for (const auto& de : dep_exps)
          for (const auto& jf : jets) {
            JetExpr m = jf;
            for (int i = 0; i < at; ++i) m *= JetExpr::indep(Indep::t);
            for (int i = 0; i < ax; ++i) m *= JetExpr::indep(Indep::x);
            for (size_t i = 0; i < sys.vars.size(); ++i)
              m *= JetExpr::coord(sys.vars[i]).pow_int(de[i]);
            Characteristic c;
            c.comp[v] = m;
            basis.push_back(std::move(c));
          }
  }
  if (basis.size() > a.guard)
    throw std::length_error("symmetry_search: ansatz exceeds guard");

  // Determining system rows, one block per equation.
  size_t n_eqs = sys.residuals().size();
  RatMat rows;
  std::vector<std::vector<JetExpr>> residuals(basis.size());
  for (size_t k = 0; k < basis.size(); ++k)
    residuals[k] = symmetry_residual(sys, basis[k]);
  for (size_t e = 0; e < n_eqs; ++e) {
    std::vector<JetExpr> col(basis.size());
    for (size_t k = 0; k < basis.size(); ++k) col[k] = residuals[k][e];
    RatMat block = split_linear_system(col);
    rows.insert(rows.end(), block.begin(), block.end());
  }
  auto null = nullspace(rows, basis.size());
  std::vector<Characteristic> out;
  for (const auto& vec : null) {
    Characteristic c;
    for (DepVar v : sys.vars) c.comp[v] = JetExpr::zero();
    for (size_t k = 0; k < basis.size(); ++k) {
      if (vec[k] == 0) continue;
      for (const auto& [v, e] : basis[k].comp) c.comp[v] += e * vec[k];
    }
    for (auto it = c.comp.begin(); it != c.comp.end();)
      it = it->second.is_zero() ? c.comp.erase(it) : std::next(it);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace wv
