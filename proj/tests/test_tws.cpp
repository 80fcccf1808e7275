#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "wv/tws.hpp"

using namespace wv;

namespace {

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
  return v;
}

}  // namespace

TEST_CASE("amplitudes for the figure parameter sweeps") {
  for (double c : {2.0, 3.0, 4.0}) {
    TWParams p;
    p.c = c;
    CHECK(p.amplitude() == doctest::Approx(c * c - 1).epsilon(1e-14));
    TWParams p3 = p;
    p3.n = 3;
    CHECK(p3.amplitude() ==
          doctest::Approx(std::sqrt(c * c - 1)).epsilon(1e-13));
  }
}

TEST_CASE("front limits and pointwise values") {
  TWParams p;
  p.c = 2;
  CHECK(std::abs(shock_closed_form(-40, p)) < 1e-8);
  CHECK(std::abs(shock_closed_form(40, p) - 3.0) < 1e-8);
  CHECK(shock_closed_form(0, p) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(shock_closed_form(1, p) ==
        doctest::Approx(3.0 / (3 * std::exp(-3) + 1)).epsilon(1e-14));
}

TEST_CASE("profile is strictly monotone between the equilibria") {
  TWParams p;
  p.c = 2;
  auto rows = profile_table(p, -10, 10, 101);
  REQUIRE(rows.size() == 101);
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].U > rows[i - 1].U);
    CHECK(rows[i].U > 0);
    CHECK(rows[i].U < 3.0);
  }
  CHECK(shock_derivative(0, p, 1) > 0);
}

TEST_CASE("translation covariance") {
  TWParams base;
  base.c = 2;
  TWParams shifted = base;
  shifted.xi0 = 2.5;
  for (double xi : grid(-8, 8, 33))
    CHECK(std::abs(shock_closed_form(xi - 2.5, base) -
                   shock_closed_form(xi, shifted)) <= 1e-12);
}

TEST_CASE("first and third order residuals at 101 samples") {
  auto xis = grid(-10, 10, 101);
  for (double n : {2.0, 3.0}) {
    CAPTURE(n);
    TWParams p;
    p.c = 2;
    p.n = n;
    CHECK(residual_check(p, xis) <= 1e-9);
    CHECK(residual_check_third(p, xis) <= 1e-9);
  }
}

TEST_CASE("an amplitude perturbation is detected") {
  TWParams p;
  p.c = 2;
  auto xis = grid(-10, 10, 101);
  double worst = 0;
  for (double xi : xis) {
    double U = 1.01 * shock_closed_form(xi, p);
    double U1 = 1.01 * shock_derivative(xi, p, 1);
    double r = p.beta * p.nu * U1 + p.nu * p.nu * p.kappa * U * U +
               (p.nu * p.nu - p.c * p.c) * U;
    worst = std::max(worst, std::abs(r));
  }
  CHECK(worst > 1e-3);
}

TEST_CASE("analytic derivatives agree with finite differences") {
  TWParams p;
  p.c = 2;
  double h = 1e-5;
  double fd = (shock_closed_form(0.3 + h, p) - shock_closed_form(0.3 - h, p)) /
              (2 * h);
  CHECK(fd == doctest::Approx(shock_derivative(0.3, p, 1)).epsilon(1e-8));
  double fd2 = (shock_derivative(0.3 + h, p, 1) -
                shock_derivative(0.3 - h, p, 1)) /
               (2 * h);
  CHECK(fd2 == doctest::Approx(shock_derivative(0.3, p, 2)).epsilon(1e-7));
}

TEST_CASE("quadrature inverts the closed form") {
  TWParams p;
  p.c = 2;
  double u0 = shock_closed_form(0, p);
  double u1 = shock_closed_form(1, p);
  CHECK(std::abs(quadrature_xi(u0, u1, p) - 1.0) <= 1e-6);
  CHECK(quadrature_xi(u0, u0, p) == 0.0);
  CHECK(std::abs(quadrature_xi(u1, u0, p) + 1.0) <= 1e-6);
}

TEST_CASE("quadrature refuses equilibrium crossings and grazing endpoints") {
  TWParams p;
  p.c = 2;
  CHECK_THROWS_AS(quadrature_xi(0.5, 3.5, p), std::domain_error);
  CHECK_THROWS_AS(quadrature_xi(1e-9, 0.5, p), std::domain_error);
  CHECK_THROWS_AS(quadrature_xi(0.5, 3.0 - 1e-9, p), std::domain_error);
}

TEST_CASE("parameter domain is enforced") {
  TWParams p;  // defaults have c = 2 > nu = 1
  p.c = 0.5;   // c^2 - nu^2 < 0: no shock branch
  CHECK_THROWS_AS(p.validate_shock(), std::domain_error);
  TWParams q;
  q.c = 2;
  q.n = 1;
  CHECK_THROWS_AS(q.amplitude(), std::domain_error);
  TWParams r;
  r.c = 2;
  r.U0 = -1;
  CHECK_THROWS_AS(shock_closed_form(0, r), std::domain_error);
}

TEST_CASE("twice differentiating the first-order form gives the third") {
  for (const FSpec& h :
       {FSpec::generic(), FSpec::westervelt_poly_symbolic(Rational(2)),
        FSpec::westervelt_poly_symbolic(Rational(3))}) {
    auto forms = reduce_to_ode(h);
    auto d2 = forms.first_order.total_derivative(Indep::x)
                  .total_derivative(Indep::x);
    auto diff = d2 - forms.third_order -
                JetExpr::param(Param::C1) * JetExpr::coord(DepVar::p, 0, 2);
    CHECK(diff.is_zero());
  }
}

TEST_CASE("space-time table matches the profile at t = 0") {
  TWParams p;
  p.c = 2;
  auto st = space_time_table(p, {0.0, 1.0}, -10, 10, 51);
  REQUIRE(st.size() == 102);
  auto prof = profile_table(p, -10, 10, 51);
  for (int i = 0; i < 51; ++i) {
    CHECK(st[i].t == 0.0);
    CHECK(st[i].U == prof[i].U);
  }
  // at t = 1 the front has moved right by nu * t
  for (int i = 0; i < 51; ++i)
    CHECK(st[51 + i].U ==
          doctest::Approx(shock_closed_form(st[51 + i].x - 1.0, p))
              .epsilon(1e-15));
}
