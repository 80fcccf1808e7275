#include "wv/poly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wv {

std::optional<Param> param_from_name(const std::string& name) {
  for (int i = 0; i < kNumParams; ++i) {
    if (name == kParamNames[i]) return static_cast<Param>(i);
  }
  return std::nullopt;
}

namespace {
const ExpVec kZeroExp{};
}

ParamPoly::ParamPoly(const Rational& constant) {
  if (constant != 0) terms_[kZeroExp] = constant;
}

ParamPoly ParamPoly::variable(Param p, int power) {
  ParamPoly out;
  if (power == 0) return ParamPoly(Rational(1));
  ExpVec e{};
  e[static_cast<int>(p)] = power;
  out.terms_[e] = Rational(1);
  return out;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == kZeroExp);
}

Rational ParamPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("ParamPoly: not a constant");
  return terms_.begin()->second;
}

void ParamPoly::add_term(const ExpVec& exps, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly out = *this;
  out += o;
  return out;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
  ParamPoly out = *this;
  out -= o;
  return out;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  ParamPoly out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      ExpVec e;
      for (int i = 0; i < kNumParams; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

ParamPoly ParamPoly::operator*(const Rational& r) const {
  ParamPoly out;
  if (r == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * r);
  return out;
}

ParamPoly ParamPoly::pow(int e) const {
  if (e < 0) throw std::logic_error("ParamPoly::pow: negative exponent");
  ParamPoly acc{Rational(1)};
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

int ParamPoly::compare(const ParamPoly& o) const {
  auto a = terms_.begin(), b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first ? -1 : 1;
    if (a->second != b->second) return a->second < b->second ? -1 : 1;
  }
  if (a != terms_.end()) return 1;
  if (b != o.terms_.end()) return -1;
  return 0;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return ParamPoly();
  // Lex-leading term of the divisor: last entry in the ordered map.
  const auto& [dlex, dlc] = *divisor.terms_.rbegin();
  ParamPoly rem = *this;
  ParamPoly quot;
  while (!rem.is_zero()) {
    const auto& [rlex, rlc] = *rem.terms_.rbegin();
    ExpVec e;
    for (int i = 0; i < kNumParams; ++i) {
      e[i] = rlex[i] - dlex[i];
      if (e[i] < 0) return std::nullopt;  // leading term not divisible
    }
    ParamPoly t;
    t.terms_[e] = rlc / dlc;
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

Rational ParamPoly::content() const {
  if (terms_.empty()) return Rational(0);
  Integer gn(0), gd(1);
  for (const auto& [e, c] : terms_) {
    gn = gcd(gn, numerator(c));
    gd = lcm(gd, denominator(c));
  }
  Rational mag(gn, gd);
  return leading_coeff() < 0 ? -mag : mag;
}

Rational ParamPoly::leading_coeff() const {
  if (terms_.empty()) return Rational(0);
  return terms_.rbegin()->second;
}

bool ParamPoly::depends_on(Param p) const {
  for (const auto& [e, c] : terms_)
    if (e[static_cast<int>(p)] != 0) return true;
  return false;
}

int ParamPoly::degree(Param p) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(p)]);
  return d;
}

int ParamPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int i = 0; i < kNumParams; ++i) s += e[i];
    d = std::max(d, s);
  }
  return d;
}

ParamPoly ParamPoly::substitute(Param p, const Rational& value) const {
  ParamPoly out;
  int idx = static_cast<int>(p);
  for (const auto& [e, c] : terms_) {
    ExpVec e2 = e;
    e2[idx] = 0;
    out.add_term(e2, c * rat_pow(value, e[idx]));
  }
  return out;
}

double ParamPoly::eval(const std::array<double, kNumParams>& values) const {
  double acc = 0;
  for (const auto& [e, c] : terms_) {
    double t = to_double(c);
    for (int i = 0; i < kNumParams; ++i)
      if (e[i] != 0) t *= std::pow(values[i], e[i]);
    acc += t;
  }
  return acc;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print highest lex term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool printed = false;
    if (mag != 1) {
      os << to_string(mag);
      printed = true;
    }
    for (int i = 0; i < kNumParams; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << kParamNames[i];
      if (e[i] != 1) os << "^" << e[i];
      printed = true;
    }
    if (!printed) os << "1";
  }
  return os.str();
}

}  // namespace wv
