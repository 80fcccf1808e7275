#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wv/parser.hpp"
#include "wv/system.hpp"

using namespace wv;

namespace {

bool sound(const DiffSystem& sys) {
  for (const auto& eq : sys.equations)
    if (!reduce_on_solutions(sys, eq.residual).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("governing equation, generic and quadratic families") {
  auto sys = build_westervelt();
  CHECK(sys.residuals().size() == 1);
  CHECK(sys.residuals()[0] ==
        parse("f''(p)*p_t^2 + f'(p)*p_tt - beta*p_txx - c^2*p_xx"));

  auto quad = build_westervelt(FSpec::westervelt_poly(Rational(1), Rational(2)));
  CHECK(quad.residuals()[0] ==
        parse("(1+2*p)*p_tt + 2*p_t^2 - beta*p_txx - c^2*p_xx"));
}

TEST_CASE("solved forms are consistent") {
  for (const char* name :
       {"westervelt", "pot1.l1", "pot1.l2", "pot2.l1", "pot2.l2"}) {
    auto sys = system_by_name(name);
    CAPTURE(name);
    for (const auto& eq : sys.equations) {
      // leading never appears in its own right-hand side
      CHECK(!eq.solved_rhs.depends_on_coord(eq.leading));
      // residual vanishes after substituting the solved form
      CHECK(eq.residual.substitute({{eq.leading, eq.solved_rhs}}).is_zero());
    }
  }
}

TEST_CASE("first potential layer at mu = 0") {
  auto sys = build_pot1_layer1();
  // equations solved for u_x and u_t
  auto ux = sys.equations[0];
  auto ut = sys.equations[1];
  JetCoord u_x{DepVar::u, 0, 1}, u_t{DepVar::u, 1, 0};
  CHECK(ux.leading == u_x);
  CHECK(ut.leading == u_t);
  CHECK(ux.solved_rhs.substitute({}, {{Param::mu, Rational(0)}}) ==
        parse("f'(p)*p_t"));
  CHECK(ut.solved_rhs.substitute({}, {{Param::mu, Rational(0)}}) ==
        parse("c^2*p_x + beta*p_tx"));
}

TEST_CASE("second potential layer at mu = sigma = 0") {
  auto sys = build_pot1_layer2();
  std::map<Param, Rational> zero = {{Param::mu, Rational(0)},
                                    {Param::sigma, Rational(0)}};
  bool saw_wt = false, saw_wx = false;
  for (const auto& eq : sys.equations) {
    if (eq.leading == JetCoord{DepVar::w, 1, 0}) {
      saw_wt = true;
      CHECK(eq.solved_rhs.substitute({}, zero) == parse("c^2*p + beta*p_t"));
    }
    if (eq.leading == JetCoord{DepVar::w, 0, 1}) {
      saw_wx = true;
      CHECK(eq.solved_rhs.substitute({}, zero) == parse("u"));
    }
  }
  CHECK(saw_wt);
  CHECK(saw_wx);
}

TEST_CASE("degenerate-parameter potential layers") {
  auto l1 = build_pot2_layer1();
  bool saw_vt = false;
  for (const auto& eq : l1.equations)
    if (eq.leading == JetCoord{DepVar::v, 1, 0}) {
      saw_vt = true;
      CHECK(eq.solved_rhs == parse("c^2*p"));
    }
  CHECK(saw_vt);

  auto l2 = build_pot2_layer2();
  bool saw_wt = false;
  for (const auto& eq : l2.equations)
    if (eq.leading == JetCoord{DepVar::w, 1, 0}) {
      saw_wt = true;
      CHECK(eq.solved_rhs == parse("v"));
    }
  CHECK(saw_wt);
}

TEST_CASE("potential equation holds on the combined system") {
  auto full = build_pot2_full();
  auto lhs = (JetExpr::func(FuncBase::f, 0,
                            JetExpr::coord(DepVar::v, 1, 0) / parse("c^2")) -
              parse("beta/c^2") * JetExpr::coord(DepVar::v, 0, 2))
                 .total_derivative(Indep::t) -
             JetExpr::coord(DepVar::v, 0, 2);
  CHECK(reduce_on_solutions(full, lhs).is_zero());
}

TEST_CASE("reduction soundness for every registered system") {
  for (const char* name :
       {"westervelt", "pot1.l1", "pot1.l2", "pot2.l1", "pot2.l2"}) {
    CAPTURE(name);
    CHECK(sound(system_by_name(name)));
  }
  CHECK(sound(build_pot2_full()));
}

TEST_CASE("reduction of the leading derivative") {
  auto sys = build_westervelt();
  CHECK(reduce_on_solutions(sys, JetExpr::coord(DepVar::p, 1, 2)) ==
        parse("(f'(p)*p_tt + f''(p)*p_t^2 - c^2*p_xx)/beta"));
}

TEST_CASE("reduction is idempotent") {
  auto sys = build_westervelt();
  auto e = JetExpr::coord(DepVar::p, 2, 2) * parse("f(p)") +
           JetExpr::coord(DepVar::p, 1, 3);
  auto r = reduce_on_solutions(sys, e);
  CHECK(reduce_on_solutions(sys, r) == r);

  auto p1 = build_pot1_layer1();
  auto e2 = JetExpr::coord(DepVar::u, 1, 1) * parse("p_t");
  auto r2 = reduce_on_solutions(p1, e2);
  CHECK(reduce_on_solutions(p1, r2) == r2);
}

TEST_CASE("layer-one integrability") {
  auto p1 = build_pot1_layer1();
  auto cross = p1.equations[0].solved_rhs.total_derivative(Indep::t) -
               p1.equations[1].solved_rhs.total_derivative(Indep::x);
  CHECK(reduce_on_solutions(p1, cross).is_zero());
}
