#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wv/parser.hpp"

using namespace wv;

TEST_CASE("grammar basics") {
  CHECK(parse("p_txx") == JetExpr::coord(DepVar::p, 1, 2));
  CHECK(parse("f'(p)*p_t") ==
        JetExpr::func(FuncBase::f, 1, parse("p")) * parse("p_t"));
  CHECK(parse("c^2*p_xx + beta*p_txx").size() == 2);
  CHECK(parse("3/2 * x") == JetExpr::indep(Indep::x) * Rational(3, 2));
}

TEST_CASE("precedence and associativity") {
  CHECK(parse("p + 2*p_x^2") == parse("p + 2*(p_x*p_x)"));
  CHECK(parse("-p_t^2") == -parse("p_t^2"));
  CHECK(parse("p - p_t - p_x") == parse("p - (p_t + p_x)"));
  CHECK(parse("c^2/beta * p") == parse("(c*c/beta)*p"));
}

TEST_CASE("function symbols with prime marks") {
  CHECK(parse("f''(p)") == JetExpr::func(FuncBase::f, 2, parse("p")));
  CHECK(parse("h'(p)") == JetExpr::func(FuncBase::h, 1, parse("p")));
  CHECK(parse("f(p+2/5)") == JetExpr::func(FuncBase::f, 0, parse("p + 2/5")));
}

TEST_CASE("print then parse is the identity on normal forms") {
  const char* cases[] = {
      "p_tx + 2*p",
      "f''(p)*p_t^2 + f'(p)*p_tt - beta*p_txx - c^2*p_xx",
      "t*x*f'(p)*p_t - x*f(p)",
      "(p+2/5)^(1/2) * p_x",
      "-2*(p+p0) - q*x*p_x",
      "mu*p_x + u - v_t",
  };
  for (const char* c : cases) {
    auto e = parse(c);
    CHECK(parse(e.str()) == e);
  }
}

TEST_CASE("errors carry positions") {
  CHECK_THROWS_AS(parse("p_y"), ParseError);
  CHECK_THROWS_AS(parse("zz + 1"), ParseError);
  CHECK_THROWS_AS(parse("p_t + * 3"), ParseError);
  CHECK_THROWS_AS(parse("(p"), ParseError);
  try {
    parse("p_t + * 3");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("rational exponents need the power-base shape") {
  CHECK_NOTHROW(parse("p^(7/3)"));
  CHECK_NOTHROW(parse("(p+2/5)^(-1/2)"));
  CHECK(parse("(v_t + c^2*v0)^(1/2)").pow_int(2) == parse("v_t + c^2*v0"));
}
