#ifndef WV_POLY_HPP
#define WV_POLY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>

#include "wv/param.hpp"
#include "wv/rational.hpp"

namespace wv {

using ExpVec = std::array<int, kNumParams>;

// Sparse multivariate polynomial over Q in the model parameters.
// Terms are kept in a map ordered lexicographically by exponent vector;
// zero coefficients are never stored.
class ParamPoly {
 public:
  ParamPoly() = default;
  explicit ParamPoly(const Rational& constant);
  static ParamPoly variable(Param p, int power = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant value; requires is_constant().
  Rational constant_value() const;

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly operator*(const Rational& r) const;
  ParamPoly pow(int e) const;

  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }
  // Total order for use as a map/sort key.
  int compare(const ParamPoly& o) const;

  // Exact division: returns quotient iff divisor divides this exactly.
  std::optional<ParamPoly> divide_exact(const ParamPoly& divisor) const;

  // gcd of all coefficients, signed by the lex-leading coefficient;
  // zero polynomial has content 0.
  Rational content() const;

  // Lex-leading coefficient (0 for the zero polynomial).
  Rational leading_coeff() const;

  bool depends_on(Param p) const;
  int degree(Param p) const;
  int total_degree() const;

  ParamPoly substitute(Param p, const Rational& value) const;
  double eval(const std::array<double, kNumParams>& values) const;

  const std::map<ExpVec, Rational>& terms() const { return terms_; }
  // Direct term insertion; coefficient must be nonzero-combined manually.
  void add_term(const ExpVec& exps, const Rational& coeff);

  std::string str() const;

 private:
  std::map<ExpVec, Rational> terms_;
};

inline ParamPoly operator*(const Rational& r, const ParamPoly& p) { return p * r; }

}  // namespace wv

#endif
