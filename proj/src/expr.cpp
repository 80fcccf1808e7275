#include "wv/expr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace wv {

// Defined in fspec.cpp.
double fspec_deriv_value(const FSpec& spec, int order, double z,
                         const std::array<double, kNumParams>& params);

std::optional<DepVar> depvar_from_name(const std::string& name) {
  for (int i = 0; i < 4; ++i)
    if (name == kDepVarNames[i]) return static_cast<DepVar>(i);
  return std::nullopt;
}

std::string JetCoord::str() const {
  std::string s = depvar_name(dv);
  if (t_order || x_order) {
    s += "_";
    s.append(t_order, 't');
    s.append(x_order, 'x');
  }
  return s;
}

int FuncSym::compare(const FuncSym& o) const {
  if (base != o.base) return base < o.base ? -1 : 1;
  if (order != o.order) return order < o.order ? -1 : 1;
  return arg->compare(*o.arg);
}

std::string FuncSym::str() const {
  std::string s = func_base_name(base);
  s.append(order, '\'');
  s += "(" + arg->str() + ")";
  return s;
}

int PowFactor::compare_base(const PowFactor& o) const {
  if (coord != o.coord) return coord < o.coord ? -1 : 1;
  return shift.compare(o.shift);
}

int PowFactor::compare(const PowFactor& o) const {
  int c = compare_base(o);
  if (c != 0) return c;
  if (exponent != o.exponent) return exponent < o.exponent ? -1 : 1;
  return 0;
}

std::string PowFactor::str() const {
  std::string s = "(" + coord.str();
  if (!shift.is_zero()) s += " + " + shift.str();
  s += ")^(" + to_string(exponent) + ")";
  return s;
}

int Monomial::compare(const Monomial& o) const {
  if (t_pow != o.t_pow) return t_pow < o.t_pow ? -1 : 1;
  if (x_pow != o.x_pow) return x_pow < o.x_pow ? -1 : 1;
  {
    auto a = coords.begin(), b = o.coords.begin();
    for (; a != coords.end() && b != o.coords.end(); ++a, ++b) {
      if (a->first != b->first) return a->first < b->first ? -1 : 1;
      if (a->second != b->second) return a->second < b->second ? -1 : 1;
    }
    if (a != coords.end()) return 1;
    if (b != o.coords.end()) return -1;
  }
  if (funcs.size() != o.funcs.size())
    return funcs.size() < o.funcs.size() ? -1 : 1;
  for (size_t i = 0; i < funcs.size(); ++i) {
    int c = funcs[i].first.compare(o.funcs[i].first);
    if (c != 0) return c;
    if (funcs[i].second != o.funcs[i].second)
      return funcs[i].second < o.funcs[i].second ? -1 : 1;
  }
  if (pows.size() != o.pows.size()) return pows.size() < o.pows.size() ? -1 : 1;
  for (size_t i = 0; i < pows.size(); ++i) {
    int c = pows[i].compare(o.pows[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Monomial::str() const {
  std::vector<std::string> parts;
  auto pow_str = [](const std::string& base, int p) {
    return p == 1 ? base : base + "^" + std::to_string(p);
  };
  if (t_pow) parts.push_back(pow_str("t", t_pow));
  if (x_pow) parts.push_back(pow_str("x", x_pow));
  for (const auto& [j, p] : coords) parts.push_back(pow_str(j.str(), p));
  for (const auto& [fs, p] : funcs) parts.push_back(pow_str(fs.str(), p));
  for (const auto& pf : pows) {
    std::string s = pf.str();
    parts.push_back(s);
  }
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "*";
    out += parts[i];
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Rational binom(int n, int j) {
  Rational r(1);
  for (int i = 0; i < j; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return r;
}

void sort_funcs(std::vector<std::pair<FuncSym, int>>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    return a.first.compare(b.first) < 0;
  });
}

}  // namespace

JetExpr JetExpr::from_rational(const Rational& r) { return from_coeff(Coeff(r)); }

JetExpr JetExpr::from_coeff(const Coeff& c) {
  JetExpr e;
  if (!c.is_zero()) e.terms_.emplace(Monomial{}, c);
  return e;
}

JetExpr JetExpr::param(Param p) { return from_coeff(Coeff::param(p)); }

JetExpr JetExpr::coord(JetCoord j) {
  Monomial m;
  m.coords[j] = 1;
  JetExpr e;
  e.terms_.emplace(std::move(m), Coeff(Rational(1)));
  return e;
}

JetExpr JetExpr::indep(Indep dir) {
  Monomial m;
  (dir == Indep::t ? m.t_pow : m.x_pow) = 1;
  JetExpr e;
  e.terms_.emplace(std::move(m), Coeff(Rational(1)));
  return e;
}

JetExpr JetExpr::func(FuncBase base, int order, const JetExpr& arg) {
  Monomial m;
  m.funcs.emplace_back(
      FuncSym{base, order, std::make_shared<const JetExpr>(arg)}, 1);
  JetExpr e;
  e.terms_.emplace(std::move(m), Coeff(Rational(1)));
  return e;
}

JetExpr JetExpr::pow_base(JetCoord j, const Coeff& shift, const Rational& exponent) {
  Monomial m;
  m.pows.push_back(PowFactor{j, shift, exponent});
  return make_term(Coeff(Rational(1)), m);
}

void JetExpr::add_term(const Monomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

JetExpr JetExpr::make_term(const Coeff& c, const Monomial& m_in) {
  if (c.is_zero()) return JetExpr();
  Monomial m = m_in;

  // Merge duplicate power bases; drop exponent-zero factors.
  std::sort(m.pows.begin(), m.pows.end(),
            [](const PowFactor& a, const PowFactor& b) { return a.compare(b) < 0; });
  std::vector<PowFactor> merged;
  for (const auto& pf : m.pows) {
    if (!merged.empty() && merged.back().compare_base(pf) == 0) {
      merged.back().exponent += pf.exponent;
    } else {
      merged.push_back(pf);
    }
  }
  m.pows.clear();
  for (auto& pf : merged)
    if (pf.exponent != 0) m.pows.push_back(pf);
  sort_funcs(m.funcs);

  // Expand any power base whose exponent became a non-negative integer.
  for (size_t i = 0; i < m.pows.size(); ++i) {
    const PowFactor pf = m.pows[i];
    if (!is_nonneg_integer(pf.exponent)) continue;
    int n = static_cast<int>(numerator(pf.exponent));
    Monomial rest = m;
    rest.pows.erase(rest.pows.begin() + i);
    JetExpr out;
    for (int j = 0; j <= n; ++j) {
      Monomial mj = rest;
      if (j > 0) mj.coords[pf.coord] += j;
      Coeff cj = c * binom(n, j);
      for (int s = 0; s < n - j; ++s) cj *= pf.shift;
      out += make_term(cj, mj);
    }
    return out;
  }

  // A plain coordinate power may not coexist with a power base on the same
  // coordinate: rewrite J = (J+shift) - shift against the first such base.
  for (size_t i = 0; i < m.pows.size(); ++i) {
    const PowFactor pf = m.pows[i];
    auto it = m.coords.find(pf.coord);
    if (it == m.coords.end()) continue;
    int k = it->second;
    Monomial rest = m;
    rest.coords.erase(pf.coord);
    rest.pows.erase(rest.pows.begin() + i);
    JetExpr out;
    for (int j = 0; j <= k; ++j) {
      Monomial mj = rest;
      PowFactor pj = pf;
      pj.exponent += j;
      mj.pows.push_back(pj);
      Coeff cj = c * binom(k, j);
      for (int s = 0; s < k - j; ++s) cj *= -pf.shift;
      out += make_term(cj, mj);
    }
    return out;
  }

  JetExpr e;
  e.terms_.emplace(std::move(m), c);
  return e;
}

bool JetExpr::is_coeff() const {
  for (const auto& [m, c] : terms_)
    if (!m.is_unit()) return false;
  return true;
}

Coeff JetExpr::coeff_value() const {
  if (terms_.empty()) return Coeff();
  if (!is_coeff()) throw std::logic_error("JetExpr: not a pure coefficient");
  return terms_.begin()->second;
}

bool JetExpr::is_rational() const { return is_zero() || (is_coeff() && coeff_value().is_rational()); }

Rational JetExpr::rational_value() const {
  if (is_zero()) return Rational(0);
  return coeff_value().rational_value();
}

JetExpr JetExpr::operator-() const {
  JetExpr out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

JetExpr& JetExpr::operator+=(const JetExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

JetExpr JetExpr::operator+(const JetExpr& o) const {
  JetExpr out = *this;
  out += o;
  return out;
}

JetExpr JetExpr::operator-(const JetExpr& o) const { return *this + (-o); }

JetExpr mul_monomial(const Coeff& c, const Monomial& a, const Monomial& b) {
  Monomial m = a;
  m.t_pow += b.t_pow;
  m.x_pow += b.x_pow;
  for (const auto& [j, p] : b.coords) m.coords[j] += p;
  for (const auto& [fs, p] : b.funcs) {
    bool found = false;
    for (auto& [fa, pa] : m.funcs) {
      if (fa.compare(fs) == 0) {
        pa += p;
        found = true;
        break;
      }
    }
    if (!found) m.funcs.emplace_back(fs, p);
  }
  for (const auto& pf : b.pows) m.pows.push_back(pf);
  return JetExpr::make_term(c, m);
}

JetExpr JetExpr::operator*(const JetExpr& o) const {
  JetExpr out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out += mul_monomial(ca * cb, ma, mb);
  return out;
}

JetExpr JetExpr::operator*(const Coeff& c) const {
  JetExpr out;
  if (c.is_zero()) return out;
  for (const auto& [m, cc] : terms_) out.add_term(m, cc * c);
  return out;
}

JetExpr JetExpr::pow_int(int e) const {
  if (e < 0) {
    if (!is_coeff() && terms_.size() != 1)
      throw std::domain_error("JetExpr::pow_int: negative power of a sum");
    return pow_rational(Rational(e));
  }
  JetExpr acc = one();
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

namespace {

// Exact rational power of a coefficient that is (rational) * (product of
// single-parameter powers). Returns nullopt when not exactly representable.
std::optional<Coeff> coeff_pow_exact(const Coeff& a, const Rational& e) {
  if (a.is_zero()) return e > 0 ? std::optional<Coeff>(Coeff()) : std::nullopt;
  if (is_integer(e)) {
    long n = static_cast<long>(numerator(e));
    Coeff acc{Rational(1)};
    Coeff base = a;
    if (n < 0) {
      base = Coeff(Rational(1)) / a;
      n = -n;
    }
    for (long i = 0; i < n; ++i) acc *= base;
    return acc;
  }
  // Need a monomial coefficient: one numerator term, single-variable den
  // factors. Total exponent of each parameter times e must be an integer.
  if (a.num().terms().size() != 1) return std::nullopt;
  std::array<Rational, kNumParams> exps{};
  const auto& [ev, cv] = *a.num().terms().begin();
  for (int i = 0; i < kNumParams; ++i) exps[i] = Rational(ev[i]);
  Rational scalar = cv;
  for (const auto& [f, mlt] : a.den_factors()) {
    if (f.terms().size() != 1) return std::nullopt;
    const auto& [fe, fc] = *f.terms().begin();
    for (int i = 0; i < kNumParams; ++i) exps[i] -= Rational(fe[i] * mlt);
    scalar /= rat_pow(fc, mlt);
  }
  auto spow = rat_pow_exact(scalar, e);
  if (!spow) return std::nullopt;
  Coeff out{*spow};
  for (int i = 0; i < kNumParams; ++i) {
    Rational pe = exps[i] * e;
    if (!is_integer(pe)) return std::nullopt;
    out *= Coeff::param(static_cast<Param>(i), static_cast<int>(numerator(pe)));
  }
  return out;
}

}  // namespace

JetExpr JetExpr::pow_rational(const Rational& e) const {
  if (is_nonneg_integer(e)) return pow_int(static_cast<int>(numerator(e)));
  if (is_zero()) throw std::domain_error("JetExpr: 0 to a non-positive power");

  if (terms_.size() == 1) {
    const auto& [m, c] = *terms_.begin();
    auto cp = coeff_pow_exact(c, e);
    if (cp) {
      Monomial out;
      bool ok = true;
      auto scale_int = [&](int p) -> std::optional<int> {
        Rational r = Rational(p) * e;
        if (!is_integer(r) || r < 0) return std::nullopt;
        return static_cast<int>(numerator(r));
      };
      if (auto tp = scale_int(m.t_pow)) out.t_pow = *tp; else ok = false;
      if (auto xp = scale_int(m.x_pow)) out.x_pow = *xp; else ok = false;
      for (const auto& [j, p] : m.coords) {
        Rational r = Rational(p) * e;
        if (is_integer(r) && r > 0) {
          out.coords[j] = static_cast<int>(numerator(r));
        } else if (m.funcs.empty() && m.pows.empty() && m.coords.size() == 1 &&
                   out.t_pow == 0 && out.x_pow == 0) {
          // Single coordinate power with fractional/negative result: a shifted
          // power base with zero shift.
          out.pows.push_back(PowFactor{j, Coeff(), r});
        } else {
          ok = false;
        }
      }
      for (const auto& [fs, p] : m.funcs) {
        Rational r = Rational(p) * e;
        if (!is_integer(r) || r <= 0) { ok = false; break; }
        out.funcs.emplace_back(fs, static_cast<int>(numerator(r)));
      }
      for (const auto& pf : m.pows) {
        PowFactor p2 = pf;
        p2.exponent = pf.exponent * e;
        out.pows.push_back(p2);
      }
      if (ok) return make_term(*cp, out);
    }
  }

  // Affine in a single jet coordinate: a*J + b -> a^e * (J + b/a)^e.
  if (terms_.size() <= 2) {
    std::optional<JetCoord> coordj;
    Coeff a, b;
    bool affine = true;
    for (const auto& [m, c] : terms_) {
      if (m.is_unit()) {
        b = c;
      } else if (m.t_pow == 0 && m.x_pow == 0 && m.funcs.empty() &&
                 m.pows.empty() && m.coords.size() == 1 &&
                 m.coords.begin()->second == 1) {
        coordj = m.coords.begin()->first;
        a = c;
      } else {
        affine = false;
      }
    }
    if (affine && coordj) {
      auto ap = coeff_pow_exact(a, e);
      if (ap) {
        Coeff shift = b / a;
        return from_coeff(*ap) * pow_base(*coordj, shift, e);
      }
    }
  }
  throw std::domain_error(
      "JetExpr::pow_rational: base is not a representable power");
}

JetExpr JetExpr::divided_by(const Coeff& c) const {
  if (c.is_zero()) throw std::domain_error("JetExpr: division by zero");
  JetExpr out;
  for (const auto& [m, cc] : terms_) out.terms_.emplace(m, cc / c);
  return out;
}

JetExpr JetExpr::operator/(const JetExpr& o) const {
  if (!o.is_coeff())
    throw std::domain_error(
        "JetExpr: division only by parameter expressions, not jet quantities");
  return divided_by(o.coeff_value());
}

bool JetExpr::operator==(const JetExpr& o) const { return (*this - o).is_zero(); }

int JetExpr::compare(const JetExpr& o) const {
  auto a = terms_.begin(), b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    int c = a->first.compare(b->first);
    if (c != 0) return c;
    c = a->second.compare(b->second);
    if (c != 0) return c;
  }
  if (a != terms_.end()) return 1;
  if (b != o.terms_.end()) return -1;
  return 0;
}

JetExpr JetExpr::d_coord(JetCoord j) const {
  JetExpr out;
  for (const auto& [m, c] : terms_) {
    // Plain power.
    auto it = m.coords.find(j);
    if (it != m.coords.end()) {
      Monomial rest = m;
      int k = it->second;
      if (k == 1)
        rest.coords.erase(j);
      else
        rest.coords[j] = k - 1;
      out += make_term(c * Rational(k), rest);
    }
    // Power bases.
    for (size_t i = 0; i < m.pows.size(); ++i) {
      if (m.pows[i].coord != j) continue;
      Monomial rest = m;
      PowFactor pf = rest.pows[i];
      rest.pows.erase(rest.pows.begin() + i);
      pf.exponent -= 1;
      rest.pows.push_back(pf);
      Rational e = m.pows[i].exponent;
      Coeff ce = c;
      // exponent is rational; multiply coefficient by it
      ce = ce * e;
      out += make_term(ce, rest);
    }
    // Function symbols (chain rule through arguments).
    for (size_t i = 0; i < m.funcs.size(); ++i) {
      const auto& [fs, l] = m.funcs[i];
      JetExpr darg = fs.arg->d_coord(j);
      if (darg.is_zero()) continue;
      Monomial rest = m;
      if (l == 1)
        rest.funcs.erase(rest.funcs.begin() + i);
      else
        rest.funcs[i].second = l - 1;
      rest.funcs.emplace_back(fs.raised(), 1);
      out += make_term(c * Rational(l), rest) * darg;
    }
  }
  return out;
}

JetExpr JetExpr::d_explicit(Indep dir) const {
  JetExpr out;
  for (const auto& [m, c] : terms_) {
    int p = dir == Indep::t ? m.t_pow : m.x_pow;
    if (p > 0) {
      Monomial rest = m;
      (dir == Indep::t ? rest.t_pow : rest.x_pow) = p - 1;
      out += make_term(c * Rational(p), rest);
    }
    for (size_t i = 0; i < m.funcs.size(); ++i) {
      const auto& [fs, l] = m.funcs[i];
      JetExpr darg = fs.arg->d_explicit(dir);
      if (darg.is_zero()) continue;
      Monomial rest = m;
      if (l == 1)
        rest.funcs.erase(rest.funcs.begin() + i);
      else
        rest.funcs[i].second = l - 1;
      rest.funcs.emplace_back(fs.raised(), 1);
      out += make_term(c * Rational(l), rest) * darg;
    }
  }
  return out;
}

JetExpr JetExpr::total_derivative(Indep dir) const {
  JetExpr out = d_explicit(dir);
  std::set<JetCoord> coords;
  collect_coords(coords);
  for (const auto& j : coords) {
    JetExpr pd = d_coord(j);
    if (!pd.is_zero()) out += coord(j.shifted(dir)) * pd;
  }
  return out;
}

JetExpr JetExpr::euler(DepVar v) const {
  std::set<JetCoord> coords;
  collect_coords(coords);
  JetExpr out;
  for (const auto& j : coords) {
    if (j.dv != v) continue;
    JetExpr term = d_coord(j);
    if (term.is_zero()) continue;
    for (int i = 0; i < j.t_order; ++i) term = term.total_derivative(Indep::t);
    for (int i = 0; i < j.x_order; ++i) term = term.total_derivative(Indep::x);
    if ((j.t_order + j.x_order) % 2 == 1) term = -term;
    out += term;
  }
  return out;
}

JetExpr JetExpr::substitute(const std::map<JetCoord, JetExpr>& coords,
                            const std::map<Param, Rational>& params) const {
  // Cycle detection on the coordinate-binding graph.
  {
    std::set<JetCoord> done;
    for (const auto& [key, rhs] : coords) {
      std::set<JetCoord> stack;
      std::vector<JetCoord> work{key};
      std::set<JetCoord> seen;
      // DFS from key through bound coordinates of each RHS.
      std::function<void(const JetCoord&)> visit = [&](const JetCoord& node) {
        if (stack.count(node))
          throw std::domain_error("substitute: cyclic binding detected at " +
                                  node.str());
        if (seen.count(node)) return;
        seen.insert(node);
        stack.insert(node);
        auto it = coords.find(node);
        if (it != coords.end()) {
          std::set<JetCoord> used;
          it->second.collect_coords(used);
          for (const auto& nxt : used)
            if (coords.count(nxt)) visit(nxt);
        }
        stack.erase(node);
      };
      visit(key);
      (void)done;
    }
  }

  JetExpr base = *this;
  for (const auto& [p, val] : params) base = base.substitute_param(p, val);

  JetExpr out;
  for (const auto& [m, c] : base.terms_) {
    JetExpr term = from_coeff(c);
    Monomial carry;
    carry.t_pow = m.t_pow;
    carry.x_pow = m.x_pow;
    for (const auto& [j, p] : m.coords) {
      auto it = coords.find(j);
      if (it == coords.end())
        carry.coords[j] = p;
      else
        term = term * it->second.pow_int(p);
    }
    for (const auto& [fs, p] : m.funcs) {
      JetExpr newarg = fs.arg->substitute(coords, {});
      term = term * func(fs.base, fs.order, newarg).pow_int(p);
    }
    for (const auto& pf : m.pows) {
      bool bound = coords.count(pf.coord) > 0;
      if (!bound) {
        Monomial pm;
        pm.pows.push_back(pf);
        term = term * make_term(Coeff(Rational(1)), pm);
      } else {
        JetExpr basee = coords.at(pf.coord) + from_coeff(pf.shift);
        term = term * basee.pow_rational(pf.exponent);
      }
    }
    term = term * make_term(Coeff(Rational(1)), carry);
    out += term;
  }
  return out;
}

JetExpr JetExpr::substitute_param(Param p, const Rational& value) const {
  JetExpr out;
  for (const auto& [m, c] : terms_) {
    Monomial m2 = m;
    m2.funcs.clear();
    m2.pows.clear();
    JetExpr term = from_coeff(c.substitute(p, value));
    for (const auto& [fs, pw] : m.funcs) {
      JetExpr newarg = fs.arg->substitute_param(p, value);
      term = term * func(fs.base, fs.order, newarg).pow_int(pw);
    }
    for (auto pf : m.pows) {
      pf.shift = pf.shift.substitute(p, value);
      Monomial pm;
      pm.pows.push_back(pf);
      term = term * make_term(Coeff(Rational(1)), pm);
    }
    term = term * make_term(Coeff(Rational(1)), m2);
    out += term;
  }
  return out;
}

bool JetExpr::depends_on_coord(JetCoord j) const {
  std::set<JetCoord> coords;
  collect_coords(coords);
  return coords.count(j) > 0;
}

bool JetExpr::depends_on_var(DepVar v) const {
  std::set<JetCoord> coords;
  collect_coords(coords);
  for (const auto& j : coords)
    if (j.dv == v) return true;
  return false;
}

void JetExpr::collect_coords(std::set<JetCoord>& out) const {
  for (const auto& [m, c] : terms_) {
    for (const auto& [j, p] : m.coords) out.insert(j);
    for (const auto& [fs, p] : m.funcs) fs.arg->collect_coords(out);
    for (const auto& pf : m.pows) out.insert(pf.coord);
  }
}

int JetExpr::max_order(DepVar v) const {
  std::set<JetCoord> coords;
  collect_coords(coords);
  int best = -1;
  for (const auto& j : coords)
    if (j.dv == v) best = std::max(best, j.t_order + j.x_order);
  return best;
}

double JetExpr::eval(const EvalContext& ctx) const {
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < kNumParams; ++i) {
      if (!ctx.params_set[i] && c.depends_on(static_cast<Param>(i)))
        throw std::domain_error(std::string("eval: unassigned parameter ") +
                                kParamNames[i]);
    }
    double v = c.eval(ctx.params);
    if (m.t_pow) v *= std::pow(ctx.t, m.t_pow);
    if (m.x_pow) v *= std::pow(ctx.x, m.x_pow);
    for (const auto& [j, p] : m.coords) {
      auto it = ctx.coords.find(j);
      if (it == ctx.coords.end())
        throw std::domain_error("eval: unassigned coordinate " + j.str());
      v *= std::pow(it->second, p);
    }
    for (const auto& [fs, p] : m.funcs) {
      const FSpec* spec = fs.base == FuncBase::f ? ctx.f : ctx.h;
      if (!spec)
        throw std::domain_error(std::string("eval: no concrete family for ") +
                                func_base_name(fs.base));
      double z = fs.arg->eval(ctx);
      v *= std::pow(fspec_deriv_value(*spec, fs.order, z, ctx.params), p);
    }
    for (const auto& pf : m.pows) {
      auto it = ctx.coords.find(pf.coord);
      if (it == ctx.coords.end())
        throw std::domain_error("eval: unassigned coordinate " + pf.coord.str());
      for (int i = 0; i < kNumParams; ++i) {
        if (!ctx.params_set[i] && pf.shift.depends_on(static_cast<Param>(i)))
          throw std::domain_error(std::string("eval: unassigned parameter ") +
                                  kParamNames[i]);
      }
      double base = it->second + pf.shift.eval(ctx.params);
      v *= std::pow(base, to_double(pf.exponent));
    }
    acc += v;
  }
  return acc;
}

std::string JetExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = false;
    Coeff cc = c;
    if (c.is_rational() && c.rational_value() < 0) {
      neg = true;
      cc = -c;
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string ms = m.str();
    if (m.is_unit()) {
      os << cc.str();
    } else if (cc.is_one()) {
      os << ms;
    } else {
      bool paren = cc.num().terms().size() > 1;
      if (paren) os << "(";
      os << cc.str();
      if (paren) os << ")";
      os << "*" << ms;
    }
  }
  return os.str();
}

}  // namespace wv
