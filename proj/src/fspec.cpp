#include "wv/fspec.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wv {

FSpec FSpec::power_law(const Rational& k, const Rational& p0, const Rational& q) {
  if (q == 0 || q == -1)
    throw std::domain_error("FSpec::power_law: q in {-1, 0} makes f'' = 0");
  if (k == 0) throw std::domain_error("FSpec::power_law: k = 0");
  FSpec s;
  s.kind = Kind::PowerLaw;
  s.k = k;
  s.p0 = p0;
  s.q = q;
  return s;
}

FSpec FSpec::inverse_cube(const Rational& k, const Rational& p0) {
  FSpec s = power_law(k, p0, Rational(-4));
  s.kind = Kind::InverseCube;
  return s;
}

FSpec FSpec::westervelt_poly(const Rational& kappa, const Rational& n) {
  if (n <= 1) throw std::domain_error("FSpec::westervelt_poly: requires n > 1");
  if (kappa <= 0)
    throw std::domain_error("FSpec::westervelt_poly: requires kappa > 0");
  FSpec s;
  s.kind = Kind::WesterveltPoly;
  s.kappa = kappa;
  s.n = n;
  return s;
}

FSpec FSpec::westervelt_poly_symbolic(const Rational& n) {
  if (n <= 1) throw std::domain_error("FSpec::westervelt_poly: requires n > 1");
  FSpec s;
  s.kind = Kind::WesterveltPoly;
  s.n = n;
  return s;
}

std::string FSpec::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Generic:
      os << "generic";
      break;
    case Kind::PowerLaw:
      os << "k(z+p0)^(1+q) with k=" << k << ", p0=" << p0 << ", q=" << q;
      break;
    case Kind::InverseCube:
      os << "k/(z+p0)^3 with k=" << k << ", p0=" << p0;
      break;
    case Kind::WesterveltPoly:
      os << "z + kappa*z^n with kappa="
         << (kappa ? to_string(*kappa) : std::string("<symbolic>"))
         << ", n=" << n;
      break;
  }
  return os.str();
}

namespace {

Rational falling_product(const Rational& top, int count) {
  Rational r(1);
  for (int i = 0; i < count; ++i) r *= top - Rational(i);
  return r;
}

}  // namespace

double FSpec::deriv_value(int order, double z) const {
  switch (kind) {
    case Kind::Generic:
      throw std::domain_error("FSpec: generic family is not concrete");
    case Kind::PowerLaw:
    case Kind::InverseCube: {
      double coeff = to_double(k * falling_product(Rational(1) + q, order));
      double e = to_double(Rational(1) + q - Rational(order));
      return coeff * std::pow(z + to_double(p0), e);
    }
    case Kind::WesterveltPoly: {
      if (!kappa)
        throw std::domain_error("FSpec: symbolic kappa is not concrete");
      double kap = to_double(*kappa);
      double nn = to_double(n);
      double nonlin =
          kap * to_double(falling_product(n, order)) * std::pow(z, nn - order);
      if (order == 0) return z + nonlin;
      if (order == 1) return 1.0 + nonlin;
      return nonlin;
    }
  }
  throw std::logic_error("FSpec: unknown kind");
}

double fspec_deriv_value(const FSpec& spec, int order, double z,
                         const std::array<double, kNumParams>& params) {
  if (spec.kind == FSpec::Kind::WesterveltPoly && !spec.kappa) {
    FSpec concrete = spec;
    double kap = params[static_cast<int>(Param::kappa)];
    concrete.kappa = Rational(1);
    double base = concrete.deriv_value(order, z);
    // deriv_value is affine in kappa; rescale the nonlinear part.
    double lin = order == 0 ? z : (order == 1 ? 1.0 : 0.0);
    return lin + kap * (base - lin);
  }
  return spec.deriv_value(order, z);
}

JetExpr fspec_apply(const FSpec& spec, FuncBase base, int order, const JetExpr& arg) {
  switch (spec.kind) {
    case FSpec::Kind::Generic:
      return JetExpr::func(base, order, arg);
    case FSpec::Kind::PowerLaw:
    case FSpec::Kind::InverseCube: {
      Rational coeff = spec.k * falling_product(Rational(1) + spec.q, order);
      if (coeff == 0) return JetExpr::zero();
      Rational e = Rational(1) + spec.q - Rational(order);
      JetExpr shifted = arg + JetExpr::from_rational(spec.p0);
      return JetExpr::from_rational(coeff) * shifted.pow_rational(e);
    }
    case FSpec::Kind::WesterveltPoly: {
      Rational fall = falling_product(spec.n, order);
      JetExpr nonlin = JetExpr::zero();
      if (fall != 0) {
        Rational e = spec.n - Rational(order);
        Coeff kap = spec.kappa ? Coeff(*spec.kappa) : Coeff::param(Param::kappa);
        nonlin = JetExpr::from_coeff(kap * fall) * arg.pow_rational(e);
      }
      if (order == 0) return arg + nonlin;
      if (order == 1) return JetExpr::one() + nonlin;
      return nonlin;
    }
  }
  throw std::logic_error("FSpec: unknown kind");
}

JetExpr substitute_family(const JetExpr& e, FuncBase base, const FSpec& spec) {
  if (spec.is_generic()) return e;
  JetExpr out;
  for (const auto& [m, c] : e.terms()) {
    JetExpr term = JetExpr::from_coeff(c);
    Monomial keep;
    keep.t_pow = m.t_pow;
    keep.x_pow = m.x_pow;
    keep.coords = m.coords;
    keep.pows = m.pows;
    for (const auto& [fs, p] : m.funcs) {
      JetExpr arg = substitute_family(*fs.arg, base, spec);
      if (fs.base == base) {
        term = term * fspec_apply(spec, base, fs.order, arg).pow_int(p);
      } else {
        term = term * JetExpr::func(fs.base, fs.order, arg).pow_int(p);
      }
    }
    term = term * JetExpr::make_term(Coeff(Rational(1)), keep);
    out += term;
  }
  return out;
}

}  // namespace wv
