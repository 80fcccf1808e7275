#include "wv/coeff.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wv {

Coeff Coeff::param(Param p, int power) {
  Coeff out;
  if (power >= 0) {
    out.num_ = ParamPoly::variable(p, power);
  } else {
    out.num_ = ParamPoly(Rational(1));
    out.push_den_factor(ParamPoly::variable(p), -power);
  }
  return out;
}

bool Coeff::is_one() const { return den_.empty() && num_ == ParamPoly(Rational(1)); }

bool Coeff::is_rational() const {
  if (!num_.is_constant()) return false;
  for (const auto& [f, m] : den_)
    if (!f.is_constant()) return false;
  return true;
}

Rational Coeff::rational_value() const {
  Rational v = num_.constant_value();
  for (const auto& [f, m] : den_) v /= rat_pow(f.constant_value(), m);
  return v;
}

void Coeff::push_den_factor(const ParamPoly& f, int mult) {
  if (mult == 0) return;
  if (f.is_zero()) throw std::domain_error("Coeff: division by zero");
  Rational cont = f.content();
  ParamPoly canon = f * (Rational(1) / cont);
  num_ = num_ * rat_pow(Rational(1) / cont, mult);
  if (canon == ParamPoly(Rational(1))) return;
  for (auto& [g, m] : den_) {
    if (g == canon) {
      m += mult;
      return;
    }
  }
  den_.emplace_back(canon, mult);
  std::sort(den_.begin(), den_.end(), [](const auto& a, const auto& b) {
    return a.first.compare(b.first) < 0;
  });
}

void Coeff::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    auto& [f, m] = *it;
    while (m > 0) {
      auto quot = num_.divide_exact(f);
      if (!quot) break;
      num_ = *quot;
      --m;
    }
    it = (m == 0) ? den_.erase(it) : ++it;
  }
}

Coeff Coeff::operator-() const {
  Coeff out = *this;
  out.num_ = -out.num_;
  return out;
}

Coeff Coeff::operator+(const Coeff& o) const {
  Coeff out;
  // Union denominator with max multiplicities.
  std::vector<std::pair<ParamPoly, int>> uni = den_;
  for (const auto& [f, m] : o.den_) {
    bool found = false;
    for (auto& [g, mg] : uni) {
      if (g == f) {
        mg = std::max(mg, m);
        found = true;
        break;
      }
    }
    if (!found) uni.emplace_back(f, m);
  }
  auto scale = [&uni](const Coeff& c) {
    ParamPoly s = c.num_;
    for (const auto& [f, m] : uni) {
      int have = 0;
      for (const auto& [g, mg] : c.den_)
        if (g == f) have = mg;
      for (int i = have; i < m; ++i) s = s * f;
    }
    return s;
  };
  out.num_ = scale(*this) + scale(o);
  out.den_ = uni;
  std::sort(out.den_.begin(), out.den_.end(), [](const auto& a, const auto& b) {
    return a.first.compare(b.first) < 0;
  });
  out.reduce();
  return out;
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator*(const Coeff& o) const {
  Coeff out;
  out.num_ = num_ * o.num_;
  out.den_ = den_;
  for (const auto& [f, m] : o.den_) out.push_den_factor(f, m);
  out.reduce();
  return out;
}

Coeff Coeff::operator*(const Rational& r) const {
  Coeff out = *this;
  out.num_ = out.num_ * r;
  if (r == 0) out.den_.clear();
  return out;
}

Coeff Coeff::divided_by(const ParamPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Coeff: division by zero");
  if (num_.is_zero()) return Coeff();
  Coeff out = *this;
  out.push_den_factor(divisor, 1);
  out.reduce();
  return out;
}

Coeff Coeff::operator/(const Coeff& o) const {
  if (o.is_zero()) throw std::domain_error("Coeff: division by zero");
  Coeff out = *this;
  for (const auto& [f, m] : o.den_)
    for (int i = 0; i < m; ++i) out.num_ = out.num_ * f;
  out.push_den_factor(o.num_, 1);
  out.reduce();
  return out;
}

ParamPoly Coeff::den_product() const {
  ParamPoly d{Rational(1)};
  for (const auto& [f, m] : den_)
    for (int i = 0; i < m; ++i) d = d * f;
  return d;
}

bool Coeff::operator==(const Coeff& o) const {
  return (num_ * o.den_product() - o.num_ * den_product()).is_zero();
}

int Coeff::compare(const Coeff& o) const {
  int c = num_.compare(o.num_);
  if (c != 0) return c;
  if (den_.size() != o.den_.size()) return den_.size() < o.den_.size() ? -1 : 1;
  for (size_t i = 0; i < den_.size(); ++i) {
    c = den_[i].first.compare(o.den_[i].first);
    if (c != 0) return c;
    if (den_[i].second != o.den_[i].second)
      return den_[i].second < o.den_[i].second ? -1 : 1;
  }
  return 0;
}

bool Coeff::depends_on(Param p) const {
  if (num_.depends_on(p)) return true;
  for (const auto& [f, m] : den_)
    if (f.depends_on(p)) return true;
  return false;
}

Coeff Coeff::substitute(Param p, const Rational& value) const {
  Coeff out;
  out.num_ = num_.substitute(p, value);
  for (const auto& [f, m] : den_) {
    ParamPoly fs = f.substitute(p, value);
    if (fs.is_zero())
      throw std::domain_error("Coeff: denominator vanishes at sample " +
                              std::string(param_name(p)) + " = " +
                              to_string(value));
    out.push_den_factor(fs, m);
  }
  out.reduce();
  return out;
}

double Coeff::eval(const std::array<double, kNumParams>& values) const {
  double v = num_.eval(values);
  for (const auto& [f, m] : den_) {
    double fv = f.eval(values);
    for (int i = 0; i < m; ++i) v /= fv;
  }
  return v;
}

std::string Coeff::str() const {
  std::ostringstream os;
  bool paren_num = num_.terms().size() > 1 && !den_.empty();
  if (paren_num) os << "(";
  os << num_.str();
  if (paren_num) os << ")";
  for (const auto& [f, m] : den_) {
    os << "/";
    bool paren = f.terms().size() > 1 || m != 1;
    if (paren) os << "(";
    os << f.str();
    if (paren) os << ")";
    if (m != 1) os << "^" << m;
  }
  return os.str();
}

}  // namespace wv
