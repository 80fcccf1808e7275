#ifndef WV_RATIONAL_HPP
#define WV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace wv {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline bool is_nonneg_integer(const Rational& r) {
  return is_integer(r) && r >= 0;
}

// Integer power with negative exponents allowed for nonzero base.
Rational rat_pow(const Rational& base, long exp);

// Exact e-th root when it exists (e.g. (9/4)^(1/2) = 3/2).
std::optional<Rational> rat_root(const Rational& base, long root);

// Rational power base^(num/den) when the result is exactly rational.
std::optional<Rational> rat_pow_exact(const Rational& base, const Rational& exp);

double to_double(const Rational& r);

std::string to_string(const Rational& r);

// Parses "a", "-a", "a/b". Returns nullopt on malformed input.
std::optional<Rational> rat_parse(const std::string& text);

}  // namespace wv

#endif
