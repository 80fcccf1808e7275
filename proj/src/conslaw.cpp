#include "wv/conslaw.hpp"

#include <functional>
#include <stdexcept>

namespace wv {

namespace {

JetExpr dot_residuals(const std::vector<JetExpr>& Q, const DiffSystem& sys) {
  auto rs = sys.residuals();
  if (Q.size() != rs.size())
    throw std::invalid_argument("multiplier vector size does not match system");
  JetExpr out;
  for (size_t i = 0; i < rs.size(); ++i) out += Q[i] * rs[i];
  return out;
}

}  // namespace

JetExpr divergence_residual(const ConsLaw& law, const DiffSystem& sys) {
  return dot_residuals(law.Q, sys) - law.T.total_derivative(Indep::t) -
         law.Phi.total_derivative(Indep::x);
}

std::vector<JetExpr> multiplier_residual(const std::vector<JetExpr>& Q,
                                         const DiffSystem& sys) {
  JetExpr w = dot_residuals(Q, sys);
  std::vector<JetExpr> out;
  for (DepVar v : sys.vars) out.push_back(w.euler(v));
  return out;
}

namespace {

// Monomials of total degree <= deg over the given generator expressions.
std::vector<JetExpr> bounded_monomials(const std::vector<JetExpr>& gens, int deg) {
  std::vector<JetExpr> out{JetExpr::one()};
  std::function<void(size_t, int, JetExpr)> rec = [&](size_t i, int left,
                                                      JetExpr acc) {
    if (i == gens.size()) return;
    rec(i + 1, left, acc);
    JetExpr cur = acc;
    for (int e = 1; e <= left; ++e) {
      cur = cur * gens[i];
      out.push_back(cur);
      rec(i + 1, left - e, cur);
    }
  };
  rec(0, deg, JetExpr::one());
  return out;
}

}  // namespace

std::vector<std::vector<JetExpr>> find_multipliers(const DiffSystem& sys,
                                                   const MultiplierAnsatz& a) {
  std::vector<JetExpr> jet_gens;
  for (DepVar v : sys.vars)
    for (int i = 0; i <= a.jet_order; ++i)
      for (int j = 0; i + j <= a.jet_order; ++j)
        jet_gens.push_back(JetExpr::coord(v, i, j));
  std::vector<JetExpr> jet_monos = bounded_monomials(jet_gens, a.jet_degree);

  auto rs = sys.residuals();
  size_t n_eq = rs.size();
  // Candidate (slot, expression) pairs.
  std::vector<std::pair<size_t, JetExpr>> cands;
  for (size_t e = 0; e < n_eq; ++e)
    for (int at = 0; at <= a.coeff_deg_t; ++at)
      for (int ax = 0; ax <= a.coeff_deg_x; ++ax)
        for (const auto& jm : jet_monos) {
          JetExpr m = jm;
          for (int i = 0; i < at; ++i) m *= JetExpr::indep(Indep::t);
          for (int i = 0; i < ax; ++i) m *= JetExpr::indep(Indep::x);
          cands.emplace_back(e, m);
        }
  if (cands.size() > a.guard)
    throw std::length_error("find_multipliers: ansatz exceeds guard");

  RatMat rows;
  for (DepVar v : sys.vars) {
    std::vector<JetExpr> images(cands.size());
    for (size_t k = 0; k < cands.size(); ++k)
      images[k] = (cands[k].second * rs[cands[k].first]).euler(v);
    RatMat block = split_linear_system(images);
    rows.insert(rows.end(), block.begin(), block.end());
  }
  auto null = nullspace(rows, cands.size());
  // Quotient by multipliers that vanish on solutions: those certify only
  // trivial conservation laws. Representatives are returned in on-shell
  // normal form.
  std::vector<std::vector<JetExpr>> out;
  for (const auto& vec : null) {
    std::vector<JetExpr> Q(n_eq, JetExpr::zero());
    for (size_t k = 0; k < cands.size(); ++k)
      if (vec[k] != 0) Q[cands[k].first] += cands[k].second * vec[k];
    for (auto& q : Q) q = reduce_on_solutions(sys, q);
    bool zero = true;
    for (const auto& q : Q) zero = zero && q.is_zero();
    if (zero) continue;
    if (!out.empty() && in_expr_span(out, Q)) continue;
    out.push_back(std::move(Q));
  }
  return out;
}

namespace {

// Gaussian elimination over the parameter-rational-function field.
std::optional<std::vector<Coeff>> coeff_solve(std::vector<std::vector<Coeff>>& m,
                                              size_t ncols) {
  size_t rows = m.size();
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Coeff inv = Coeff(Rational(1)) / m[r][c];
    for (size_t j = c; j <= ncols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Coeff factor = m[i][c];
      for (size_t j = c; j <= ncols; ++j)
        m[i][j] = m[i][j] - factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  // Inconsistent iff some zero row has nonzero rhs.
  for (size_t i = r; i < rows; ++i)
    if (!m[i][ncols].is_zero()) return std::nullopt;
  std::vector<Coeff> x(ncols, Coeff(Rational(0)));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][ncols];
  return x;
}

}  // namespace

ConsLaw flux_reconstruct(const std::vector<JetExpr>& Q, const DiffSystem& sys) {
  JetExpr b = dot_residuals(Q, sys);

  int deg_t = 1, deg_x = 1;
  for (const auto& q : Q)
    for (const auto& [m, c] : q.terms()) {
      if (m.t_pow > deg_t) deg_t = m.t_pow;
      if (m.x_pow > deg_x) deg_x = m.x_pow;
    }

  bool has_p = false;
  for (DepVar v : sys.vars) has_p = has_p || v == DepVar::p;
  std::vector<JetExpr> jet_parts{JetExpr::one()};
  for (DepVar v : sys.vars) {
    jet_parts.push_back(JetExpr::coord(v));
    jet_parts.push_back(JetExpr::coord(v, 1, 0));
    jet_parts.push_back(JetExpr::coord(v, 0, 1));
  }
  if (has_p) {
    JetExpr p = JetExpr::coord(DepVar::p);
    jet_parts.push_back(JetExpr::coord(DepVar::p, 1, 1));
    jet_parts.push_back(JetExpr::func(FuncBase::f, 0, p));
    jet_parts.push_back(JetExpr::func(FuncBase::f, 1, p) *
                        JetExpr::coord(DepVar::p, 1, 0));
    jet_parts.push_back(JetExpr::func(FuncBase::f, 1, p) *
                        JetExpr::coord(DepVar::p, 0, 1));
  }
  std::vector<JetExpr> cands;
  for (int at = 0; at <= deg_t; ++at)
    for (int ax = 0; ax <= deg_x; ++ax)
      for (const auto& jp : jet_parts) {
        JetExpr m = jp;
        for (int i = 0; i < at; ++i) m *= JetExpr::indep(Indep::t);
        for (int i = 0; i < ax; ++i) m *= JetExpr::indep(Indep::x);
        cands.push_back(m);
      }

  // Unknowns: T coefficients then Phi coefficients, over the parameter field.
  size_t n = cands.size();
  std::vector<JetExpr> gcol(2 * n);
  for (size_t k = 0; k < n; ++k) {
    gcol[k] = cands[k].total_derivative(Indep::t);
    gcol[n + k] = cands[k].total_derivative(Indep::x);
  }
  std::map<Monomial, std::vector<Coeff>> by_mono;
  auto stamp = [&](const JetExpr& e, size_t col) {
    for (const auto& [m, c] : e.terms()) {
      auto& row = by_mono[m];
      if (row.empty()) row.resize(2 * n + 1, Coeff(Rational(0)));
      row[col] = c;
    }
  };
  for (size_t k = 0; k < 2 * n; ++k) stamp(gcol[k], k);
  stamp(b, 2 * n);
  std::vector<std::vector<Coeff>> mat;
  mat.reserve(by_mono.size());
  for (auto& [m, row] : by_mono) {
    if (row.empty()) row.resize(2 * n + 1, Coeff(Rational(0)));
    mat.push_back(std::move(row));
  }
  auto sol = coeff_solve(mat, 2 * n);
  if (!sol)
    throw std::domain_error(
        "flux_reconstruct: term basis cannot represent the law");
  ConsLaw law;
  law.Q = Q;
  for (size_t k = 0; k < n; ++k) {
    law.T += cands[k] * (*sol)[k];
    law.Phi += cands[k] * (*sol)[n + k];
  }
  if (!divergence_residual(law, sys).is_zero())
    throw std::logic_error("flux_reconstruct: certification failed");
  return law;
}

bool in_expr_span(const std::vector<std::vector<JetExpr>>& basis,
                  const std::vector<JetExpr>& target) {
  size_t K = basis.size();
  size_t slots = target.size();
  for (const auto& bvec : basis)
    if (bvec.size() != slots)
      throw std::invalid_argument("in_expr_span: slot count mismatch");
  RatMat a;
  RatVec rhs;
  for (size_t s = 0; s < slots; ++s) {
    std::vector<JetExpr> col(K + 1);
    for (size_t k = 0; k < K; ++k) col[k] = basis[k][s];
    col[K] = target[s];
    RatMat block = split_linear_system(col);
    for (auto& row : block) {
      rhs.push_back(row.back());
      row.pop_back();
      a.push_back(std::move(row));
    }
  }
  return solve(a, rhs).has_value();
}

}  // namespace wv
