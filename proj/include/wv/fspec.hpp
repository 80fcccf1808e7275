#ifndef WV_FSPEC_HPP
#define WV_FSPEC_HPP

#include <optional>
#include <string>

#include "wv/expr.hpp"

namespace wv {

// Constitutive family for the nonlinearity f (or its nonlinear part h).
//   Generic        — opaque symbol, f'' != 0 assumed
//   PowerLaw       — f(z) = k (z + p0)^(1+q), q not in {-1, 0}
//   InverseCube    — f(z) = k / (z + p0)^3
//   WesterveltPoly — f(z) = z + kappa z^n, n > 1
struct FSpec {
  enum class Kind { Generic, PowerLaw, InverseCube, WesterveltPoly };

  Kind kind = Kind::Generic;
  Rational k{1};
  Rational p0{0};
  Rational q{1};
  std::optional<Rational> kappa;  // nullopt: keep kappa symbolic
  Rational n{2};

  static FSpec generic() { return FSpec{}; }
  static FSpec power_law(const Rational& k, const Rational& p0, const Rational& q);
  static FSpec inverse_cube(const Rational& k, const Rational& p0);
  static FSpec westervelt_poly(const Rational& kappa, const Rational& n);
  static FSpec westervelt_poly_symbolic(const Rational& n);

  bool is_generic() const { return kind == Kind::Generic; }
  std::string str() const;

  // Numeric value of the m-th derivative at z; requires a concrete family
  // (WesterveltPoly must have kappa bound).
  double deriv_value(int order, double z) const;
};

// The m-th derivative of the family applied to an argument expression, as an
// exact symbolic expression. Generic families return the opaque symbol.
JetExpr fspec_apply(const FSpec& spec, FuncBase base, int order, const JetExpr& arg);

// Replaces every f-symbol (or h-symbol) of the given base by the family.
JetExpr substitute_family(const JetExpr& e, FuncBase base, const FSpec& spec);

}  // namespace wv

#endif
