#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "wv/fspec.hpp"
#include "wv/parser.hpp"

using namespace wv;

namespace {

// Random sum of monomials over a small pool of jet factors. Depth-bounded by
// construction; enough variety to exercise product/chain rules.
JetExpr random_expr(std::mt19937& rng) {
  static const char* pool[] = {"t",    "x",   "p",   "p_t", "p_x",
                               "p_tt", "p_tx", "f(p)", "u",   "u_x"};
  std::uniform_int_distribution<int> nterms(1, 3), nfac(1, 3), pick(0, 9),
      coeff(-4, 4);
  JetExpr e;
  for (int i = 0; i < nterms(rng); ++i) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    JetExpr term = JetExpr::from_rational(Rational(c));
    for (int j = 0; j < nfac(rng); ++j) term *= parse(pool[pick(rng)]);
    e += term;
  }
  return e;
}

}  // namespace

TEST_CASE("mixed partials commute in the parser") {
  CHECK(parse("p_tx + p_xt") == parse("2*p_tx"));
  CHECK(parse("p_txx") == parse("p_xtx"));
}

TEST_CASE("function symbols chain through total derivatives") {
  auto f = JetExpr::func(FuncBase::f, 0, parse("p"));
  CHECK(f.total_derivative(Indep::t) == parse("f'(p)*p_t"));
  CHECK(parse("p").total_derivative(Indep::x) == parse("p_x"));
}

TEST_CASE("iterated total derivative expands products") {
  auto e = parse("x*p");
  CHECK(e.total_derivative(Indep::x).total_derivative(Indep::t) ==
        parse("p_t + x*p_tx"));
  CHECK(e.total_derivative(Indep::t).total_derivative(Indep::x) ==
        parse("p_t + x*p_tx"));
}

TEST_CASE("euler operator basics") {
  CHECK(parse("p_t^2").euler(DepVar::p) == parse("-2*p_tt"));
  // the governing residual with multiplier 1 is a divergence
  auto resid = parse("f''(p)*p_t^2 + f'(p)*p_tt - beta*p_txx - c^2*p_xx");
  CHECK(resid.euler(DepVar::p).is_zero());
}

TEST_CASE("euler annihilates randomized divergences") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 12; ++trial) {
    JetExpr A = random_expr(rng), B = random_expr(rng);
    JetExpr div =
        A.total_derivative(Indep::t) + B.total_derivative(Indep::x);
    CHECK(div.euler(DepVar::p).is_zero());
    CHECK(div.euler(DepVar::u).is_zero());
  }
}

TEST_CASE("total derivatives commute on randomized expressions") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    JetExpr e = random_expr(rng);
    CHECK(e.total_derivative(Indep::t).total_derivative(Indep::x) ==
          e.total_derivative(Indep::x).total_derivative(Indep::t));
  }
}

TEST_CASE("derivations are linear") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    JetExpr a = random_expr(rng), b = random_expr(rng);
    JetExpr combo = a * Rational(5, 3) + b;
    CHECK(combo.total_derivative(Indep::t) ==
          a.total_derivative(Indep::t) * Rational(5, 3) +
              b.total_derivative(Indep::t));
  }
}

TEST_CASE("ring laws under normalization") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 8; ++trial) {
    JetExpr a = random_expr(rng), b = random_expr(rng), c = random_expr(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("substitution of jet coordinates") {
  CHECK(parse("p_x").substitute({{{DepVar::p, 0, 1}, JetExpr::zero()}})
            .is_zero());
  auto e = parse("p_t*p_x + p_x^2");
  auto s = e.substitute({{{DepVar::p, 0, 1}, parse("3*p")}});
  CHECK(s == parse("3*p*p_t + 9*p^2"));
}

TEST_CASE("power-law family substitution keeps rational exponents exact") {
  // f(z) = z^(1+q) at q = 7/3: f'(p) p_t -> (10/3) p^(7/3) p_t
  auto fam = FSpec::power_law(Rational(1), Rational(0), Rational("7/3"));
  auto d = substitute_family(parse("f'(p)*p_t"), FuncBase::f, fam);
  CHECK(d == parse("10/3 * p^(7/3) * p_t"));
}

TEST_CASE("fractional powers cancel against integer powers") {
  auto s = parse("(p+2/5)^(1/2)");
  CHECK(s.pow_int(2) == parse("p + 2/5"));
  CHECK((s * s) == parse("p + 2/5"));
}

TEST_CASE("numeric evaluation") {
  JetExpr::EvalContext ctx;
  ctx.coords[{DepVar::p, 0, 1}] = 3.0;
  CHECK(parse("p_x^2").eval(ctx) == doctest::Approx(9.0));

  // f(z) = z + kappa z^2, kappa = 1: f'(2) = 5
  JetExpr::EvalContext ctx2;
  ctx2.coords[{DepVar::p, 0, 0}] = 2.0;
  FSpec fam = FSpec::westervelt_poly(Rational(1), Rational(2));
  ctx2.f = &fam;
  CHECK(parse("f'(p)").eval(ctx2) == doctest::Approx(5.0));

  JetExpr::EvalContext ctx3;
  ctx3.set_param(Param::c, 2.0);
  ctx3.set_param(Param::nu, 1.0);
  CHECK(parse("c^2 - nu^2").eval(ctx3) == doctest::Approx(3.0));
}

TEST_CASE("evaluation rejects unassigned symbols") {
  JetExpr::EvalContext ctx;
  CHECK_THROWS(parse("beta*p_x").eval(ctx));
  CHECK_THROWS(parse("f(p)").eval(ctx));  // no family registered
}

TEST_CASE("normalization is idempotent via round trips") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 8; ++trial) {
    JetExpr e = random_expr(rng);
    CHECK(parse(e.str()) == e);
    CHECK((e + JetExpr::zero()) == e);
    CHECK((e - e).is_zero());
  }
}
