#ifndef WV_EXPR_HPP
#define WV_EXPR_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wv/coeff.hpp"

namespace wv {

enum class DepVar : int { p = 0, u, v, w };
inline constexpr std::array<const char*, 4> kDepVarNames = {"p", "u", "v", "w"};
inline const char* depvar_name(DepVar d) {
  return kDepVarNames[static_cast<int>(d)];
}
std::optional<DepVar> depvar_from_name(const std::string& name);

enum class Indep { t, x };

// A jet coordinate: a dependent variable differentiated t_order times in t
// and x_order times in x. (0,0) is the variable itself. Mixed partials
// commute, so the pair of orders is the whole identity.
struct JetCoord {
  DepVar dv;
  int t_order = 0;
  int x_order = 0;

  JetCoord shifted(Indep dir) const {
    return {dv, t_order + (dir == Indep::t), x_order + (dir == Indep::x)};
  }
  auto operator<=>(const JetCoord&) const = default;
  std::string str() const;
};

class JetExpr;

enum class FuncBase { f, h };
inline const char* func_base_name(FuncBase b) { return b == FuncBase::f ? "f" : "h"; }

// Opaque function symbol f^(k)(arg) or h^(k)(arg). Equal iff base, derivative
// order, and normalized argument agree.
struct FuncSym {
  FuncBase base;
  int order = 0;
  std::shared_ptr<const JetExpr> arg;

  FuncSym raised() const { return {base, order + 1, arg}; }
  int compare(const FuncSym& o) const;
  std::string str() const;
};

// (coord + shift)^exponent with a parameter-rational shift and a rational
// exponent that is not a non-negative integer (those expand into plain
// powers). Carries the f-family power bases: (p+p0)^e and (v_t+c^2*v0)^e.
struct PowFactor {
  JetCoord coord;
  Coeff shift;
  Rational exponent;

  int compare_base(const PowFactor& o) const;
  int compare(const PowFactor& o) const;
  std::string str() const;
};

// Commutative product of t/x powers, jet-coordinate powers, function-symbol
// powers, and power-base factors. Invariant: a monomial never contains both a
// plain power of coordinate J and a PowFactor based on J.
struct Monomial {
  int t_pow = 0;
  int x_pow = 0;
  std::map<JetCoord, int> coords;
  std::vector<std::pair<FuncSym, int>> funcs;  // sorted, powers >= 1
  std::vector<PowFactor> pows;                 // sorted by base

  bool is_unit() const {
    return t_pow == 0 && x_pow == 0 && coords.empty() && funcs.empty() &&
           pows.empty();
  }
  int compare(const Monomial& o) const;
  bool operator<(const Monomial& o) const { return compare(o) < 0; }
  std::string str() const;
};

struct FSpec;

// Exact symbolic expression on jet space: a canonical sum of monomials with
// rational-function coefficients in the parameters. All operations return
// normalized expressions; normalization is by construction and a zero test is
// syntactic emptiness.
class JetExpr {
 public:
  JetExpr() = default;

  static JetExpr zero() { return JetExpr(); }
  static JetExpr one() { return from_rational(Rational(1)); }
  static JetExpr from_rational(const Rational& r);
  static JetExpr from_coeff(const Coeff& c);
  static JetExpr param(Param p);
  static JetExpr coord(JetCoord j);
  static JetExpr coord(DepVar dv, int t_order = 0, int x_order = 0) {
    return coord(JetCoord{dv, t_order, x_order});
  }
  static JetExpr indep(Indep dir);
  static JetExpr func(FuncBase base, int order, const JetExpr& arg);
  // (coord + shift)^exponent; expands when exponent is a non-negative integer.
  static JetExpr pow_base(JetCoord j, const Coeff& shift, const Rational& exponent);
  // Canonicalizes the given monomial under coefficient c.
  static JetExpr make_term(const Coeff& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_coeff() const;  // free of t, x, and all jet content
  // Requires is_coeff().
  Coeff coeff_value() const;
  bool is_rational() const;
  Rational rational_value() const;

  JetExpr operator-() const;
  JetExpr operator+(const JetExpr& o) const;
  JetExpr operator-(const JetExpr& o) const;
  JetExpr operator*(const JetExpr& o) const;
  JetExpr& operator+=(const JetExpr& o);
  JetExpr& operator-=(const JetExpr& o) { return *this += -o; }
  JetExpr& operator*=(const JetExpr& o) { return *this = *this * o; }
  JetExpr operator*(const Coeff& c) const;
  JetExpr operator*(const Rational& r) const { return *this * Coeff(r); }
  JetExpr pow_int(int e) const;
  // Rational power; requires the base to be a parameter-scaled affine
  // expression in one jet coordinate (or a single monomial with exactly
  // representable coefficient power). Throws otherwise.
  JetExpr pow_rational(const Rational& e) const;
  // Division by a jet-free expression (parameter expression); throws if the
  // divisor has jet content or is zero.
  JetExpr operator/(const JetExpr& o) const;
  JetExpr divided_by(const Coeff& c) const;

  bool operator==(const JetExpr& o) const;
  bool operator!=(const JetExpr& o) const { return !(*this == o); }
  int compare(const JetExpr& o) const;

  // Partial derivative treating jet coordinates as independent symbols,
  // chaining through function-symbol arguments and power bases.
  JetExpr d_coord(JetCoord j) const;
  // Explicit t/x partial (jet coordinates held fixed).
  JetExpr d_explicit(Indep dir) const;
  // Total derivative D_t or D_x.
  JetExpr total_derivative(Indep dir) const;
  // Euler operator (variational derivative) with respect to one dependent
  // variable; annihilates total space-time divergences.
  JetExpr euler(DepVar v) const;

  // Simultaneous substitution of jet coordinates and exact parameter samples.
  JetExpr substitute(const std::map<JetCoord, JetExpr>& coords,
                     const std::map<Param, Rational>& params = {}) const;
  JetExpr substitute_param(Param p, const Rational& value) const;

  // Occurrence queries (all recurse through function arguments and bases).
  bool depends_on_coord(JetCoord j) const;
  bool depends_on_var(DepVar v) const;
  void collect_coords(std::set<JetCoord>& out) const;
  int max_order(DepVar v) const;  // max t_order + x_order, -1 if absent

  struct EvalContext {
    double t = 0, x = 0;
    std::map<JetCoord, double> coords;
    std::array<double, kNumParams> params{};
    std::array<bool, kNumParams> params_set{};
    const FSpec* f = nullptr;
    const FSpec* h = nullptr;

    void set_param(Param p, double v) {
      params[static_cast<int>(p)] = v;
      params_set[static_cast<int>(p)] = true;
    }
  };
  double eval(const EvalContext& ctx) const;

  const std::map<Monomial, Coeff>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Coeff& c);
  friend JetExpr mul_monomial(const Coeff& c, const Monomial& a,
                              const Monomial& b);

  std::map<Monomial, Coeff> terms_;
};

inline JetExpr operator*(const Coeff& c, const JetExpr& e) { return e * c; }
inline JetExpr operator*(const Rational& r, const JetExpr& e) { return e * r; }

}  // namespace wv

#endif
