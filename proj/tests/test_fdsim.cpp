#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "wv/fdsim.hpp"

using namespace wv;

TEST_CASE("configuration validation") {
  GridConfig cfg;
  cfg.N = 8;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  GridConfig cfg2;
  cfg2.x_max = cfg2.x_min;
  CHECK_THROWS_AS(cfg2.validate(), std::invalid_argument);
  GridConfig cfg3;
  cfg3.f = FSpec::generic();
  CHECK_THROWS_AS(cfg3.validate(), std::invalid_argument);
  // shock reference and discretized family must agree
  GridConfig cfg4;
  cfg4.shock.n = 3;
  CHECK_THROWS_AS(cfg4.validate(), std::invalid_argument);
  GridConfig ok;
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("automatic step obeys both stability limits") {
  GridConfig cfg;
  cfg.N = 100;
  double dx = cfg.dx();
  CHECK(cfg.auto_dt() ==
        doctest::Approx(std::min(0.25 * dx * dx / std::max(cfg.beta, 1.0),
                                 0.5 * dx / cfg.c)));
}

TEST_CASE("equilibria are fixed points of the discrete flow") {
  GridConfig cfg;
  cfg.init = InitKind::Pulse;
  cfg.bc = BoundaryKind::Periodic;
  cfg.pulse_amplitude = 0;
  cfg.N = 32;
  auto s = initial_state(cfg);
  auto s0 = s;
  for (int i = 0; i < 5; ++i) step_rk4(s, cfg, 0.01, nullptr);
  for (int i = 0; i <= cfg.N; ++i) {
    CHECK(s.p[i] == s0.p[i]);
    CHECK(s.q[i] == s0.q[i]);
  }
}

TEST_CASE("initial monitors record the conserved integrals") {
  GridConfig cfg;
  cfg.init = InitKind::Pulse;
  cfg.bc = BoundaryKind::Periodic;
  cfg.N = 200;
  cfg.t_end = 0.05;
  cfg.c = 1;
  auto [state, rep] = run(cfg);
  REQUIRE(!rep.rows.empty());
  const auto& first = rep.rows.front();
  CHECK(first.t == 0.0);
  // the pulse starts at rest (q = 0), so the rate density f'(p)q vanishes
  CHECK(first.C[0] == doctest::Approx(0.0).epsilon(1e-14));
  // and the t-weighted density reduces to -f(p) at t = 0
  auto s0 = initial_state(cfg);
  double dx = cfg.dx();
  double mass = 0;
  for (int i = 0; i <= cfg.N; ++i) {
    double p = s0.p[i];
    double f = p + p * p;  // kappa = 1, n = 2
    mass += (i == 0 || i == cfg.N ? 0.5 : 1.0) * f * dx;
  }
  CHECK(first.C[1] == doctest::Approx(-mass).epsilon(1e-12));
}

TEST_CASE("time refinement converges at the integrator's order") {
  GridConfig cfg;
  cfg.N = 64;
  cfg.x_min = -10;
  cfg.x_max = 10;
  cfg.t_end = 0.25;

  auto final_p = [&](double dt) {
    GridConfig c = cfg;
    c.dt = dt;
    return run(c).first.p;
  };
  double dt0 = cfg.auto_dt();
  auto a = final_p(dt0), b = final_p(dt0 / 2), c = final_p(dt0 / 4);
  double e1 = 0, e2 = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    e1 = std::max(e1, std::abs(a[i] - c[i]));
    e2 = std::max(e2, std::abs(b[i] - c[i]));
  }
  // successive dt-halvings shrink the difference by roughly 2^4
  CHECK(e1 / e2 > 8.0);
}

TEST_CASE("exact-shock error halves twice per grid doubling") {
  GridConfig cfg;
  auto res = convergence_order(cfg, {100, 200});
  REQUIRE(res.errors.size() == 2);
  CHECK(res.monotone);
  double ratio = res.errors[0] / res.errors[1];
  CHECK(ratio > 3.0);
  CHECK(ratio < 6.0);
}

TEST_CASE("periodic boundary wraps the stencil") {
  GridConfig cfg;
  cfg.init = InitKind::Pulse;
  cfg.bc = BoundaryKind::Periodic;
  cfg.N = 64;
  cfg.pulse_center = cfg.x_min;  // straddles the seam
  auto s = initial_state(cfg);
  std::vector<double> dp(s.p.size()), dq(s.q.size());
  rhs_eval(s, cfg, dp, dq);
  CHECK(dq[0] == doctest::Approx(dq[cfg.N]).epsilon(1e-14));
  for (double v : dq) CHECK(std::isfinite(v));
}

TEST_CASE("hyperbolicity guard rejects a degenerate state") {
  GridConfig cfg;
  cfg.N = 32;
  cfg.init = InitKind::Pulse;
  cfg.bc = BoundaryKind::Periodic;
  auto s = initial_state(cfg);
  for (auto& p : s.p) p = -0.5;  // f'(p) = 1 + 2p = 0
  std::vector<double> dp(s.p.size()), dq(s.q.size());
  CHECK_THROWS_AS(rhs_eval(s, cfg, dp, dq), std::runtime_error);
}

TEST_CASE("flux-corrected drift stays small on a short dirichlet run") {
  GridConfig cfg;
  cfg.N = 100;
  cfg.t_end = 0.5;
  auto [state, rep] = run(cfg);
  const auto& last = rep.rows.back();
  CHECK(last.t == doctest::Approx(0.5));
  for (double d : last.drift) CHECK(std::abs(d) < 1e-3);
  CHECK(last.errLinf < 0.1);
  CHECK(last.errL2 < 0.1);
}
