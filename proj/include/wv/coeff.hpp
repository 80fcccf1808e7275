#ifndef WV_COEFF_HPP
#define WV_COEFF_HPP

#include <string>
#include <utility>
#include <vector>

#include "wv/poly.hpp"

namespace wv {

// Rational function in the parameters, kept as numerator polynomial over a
// factored denominator. Denominator factors only ever come from explicit
// divisions by parameter expressions (beta, c^2, beta-mu, ...), so the
// factored form stays short and cancellation is by exact trial division.
class Coeff {
 public:
  Coeff() = default;
  explicit Coeff(const Rational& r) : num_(r) {}
  explicit Coeff(const ParamPoly& p) : num_(p) {}
  static Coeff param(Param p, int power = 1);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const;
  // Requires is_rational().
  Rational rational_value() const;

  Coeff operator-() const;
  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff operator*(const Rational& r) const;

  // Division by a parameter polynomial; throws on zero divisor.
  Coeff divided_by(const ParamPoly& divisor) const;
  // Division by another coefficient whose numerator becomes one denominator
  // factor; throws if o is zero.
  Coeff operator/(const Coeff& o) const;

  // Value equality (cross-multiplied).
  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }
  // Deterministic total order on the representation.
  int compare(const Coeff& o) const;

  bool depends_on(Param p) const;
  Coeff substitute(Param p, const Rational& value) const;
  double eval(const std::array<double, kNumParams>& values) const;

  const ParamPoly& num() const { return num_; }
  const std::vector<std::pair<ParamPoly, int>>& den_factors() const {
    return den_;
  }
  ParamPoly den_product() const;
  bool has_den() const { return !den_.empty(); }

  std::string str() const;

 private:
  void push_den_factor(const ParamPoly& f, int mult);
  void reduce();

  ParamPoly num_;
  // Factors sorted by ParamPoly::compare; each canonical (content +-1 with
  // positive leading coefficient), multiplicity >= 1.
  std::vector<std::pair<ParamPoly, int>> den_;
};

}  // namespace wv

#endif
