#include "wv/rational.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wv {

Rational rat_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (exp < 0) {
    if (base == 0) throw std::domain_error("rat_pow: 0 to negative power");
    return Rational(1) / rat_pow(base, -exp);
  }
  Rational acc(1), b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

std::optional<Rational> rat_root(const Rational& base, long root) {
  if (root <= 0) return std::nullopt;
  if (root == 1) return base;
  if (base < 0 && root % 2 == 0) return std::nullopt;
  auto iroot = [](const Integer& n, long k) -> std::optional<Integer> {
    if (n == 0) return Integer(0);
    bool neg = n < 0;
    Integer a = abs(n);
    // Newton iteration on integers.
    Integer x = Integer(1) << (static_cast<unsigned>(msb(a)) / k + 1);
    while (true) {
      Integer xk = pow(x, static_cast<unsigned>(k - 1));
      Integer next = ((k - 1) * x + a / xk) / k;
      if (next >= x) break;
      x = next;
    }
    if (pow(x, static_cast<unsigned>(k)) != a) return std::nullopt;
    return neg ? -x : x;
  };
  auto rn = iroot(numerator(base), root);
  auto rd = iroot(denominator(base), root);
  if (!rn || !rd) return std::nullopt;
  return Rational(*rn, *rd);
}

std::optional<Rational> rat_pow_exact(const Rational& base, const Rational& exp) {
  if (is_integer(exp)) return rat_pow(base, static_cast<long>(numerator(exp)));
  if (base == 0) return exp > 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
  long den = static_cast<long>(denominator(exp));
  auto root = rat_root(base, den);
  if (!root) return std::nullopt;
  return rat_pow(*root, static_cast<long>(numerator(exp)));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::optional<Rational> rat_parse(const std::string& text) {
  try {
    return Rational(text);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace wv
