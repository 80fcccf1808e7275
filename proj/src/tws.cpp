#include "wv/tws.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace wv {

void TWParams::validate_shock() const {
  if (beta == 0 || nu == 0) throw std::domain_error("beta*nu must be nonzero");
  if (n <= 1) throw std::domain_error("shock branch requires n > 1");
  if (U0 <= 0) throw std::domain_error("shock branch requires U0 > 0");
  if (kappa <= 0) throw std::domain_error("shock branch requires kappa > 0");
  if (c * c - nu * nu <= 0)
    throw std::domain_error("shock branch requires c^2 - nu^2 > 0");
}

double TWParams::amplitude() const {
  validate_shock();
  return std::pow((c * c - nu * nu) / (kappa * nu * nu), 1.0 / (n - 1));
}

namespace {

// h^(order)(U) through the family. WesterveltPoly keeps kappa and the
// exponent exact (kappa symbolic when unbound).
JetExpr happly(const FSpec& spec, int order, const JetExpr& arg) {
  if (spec.kind == FSpec::Kind::Generic)
    return JetExpr::func(FuncBase::h, order, arg);
  if (spec.kind != FSpec::Kind::WesterveltPoly)
    throw std::invalid_argument("happly: family has no polynomial h-part");
  JetExpr kap = spec.kappa ? JetExpr::from_rational(*spec.kappa)
                           : JetExpr::param(Param::kappa);
  Rational fall(1);
  Rational e = spec.n;
  for (int i = 0; i < order; ++i) {
    fall *= e;
    e -= 1;
  }
  return kap * JetExpr::from_rational(fall) * arg.pow_rational(e);
}

}  // namespace

OdeForms reduce_to_ode(const FSpec& h_part) {
  JetExpr U = JetExpr::coord(DepVar::p);
  JetExpr U1 = JetExpr::coord(DepVar::p, 0, 1);
  JetExpr U2 = JetExpr::coord(DepVar::p, 0, 2);
  JetExpr U3 = JetExpr::coord(DepVar::p, 0, 3);
  JetExpr bnu = JetExpr::param(Param::beta) * JetExpr::param(Param::nu);
  JetExpr nu2 = JetExpr::param(Param::nu) * JetExpr::param(Param::nu);
  JetExpr gap = nu2 - JetExpr::param(Param::c) * JetExpr::param(Param::c);

  OdeForms out;
  out.third_order = bnu * U3 + gap * U2 +
                    nu2 * (happly(h_part, 1, U) * U2 +
                           happly(h_part, 2, U) * U1 * U1);
  out.first_order = bnu * U1 + gap * U + nu2 * happly(h_part, 0, U) +
                    JetExpr::param(Param::C1) * U + JetExpr::param(Param::C0);
  return out;
}

namespace {

// Shared pieces of the closed form: with A = c^2 - nu^2, r = A(n-1)/(beta nu),
// m = 1/(n-1) and D(xi) = U0 A e^{-r (xi - xi0)} + kappa nu^2, the profile is
// U = (A/D)^m. g = D'/D obeys g' = -r g - g^2, and U'/U = -m g.
struct ShockChain {
  double U, g, g1, g2, U1, U2, U3;
};

ShockChain chain(double xi, const TWParams& p) {
  p.validate_shock();
  double A = p.c * p.c - p.nu * p.nu;
  double r = A * (p.n - 1) / (p.beta * p.nu);
  double m = 1.0 / (p.n - 1);
  double E = std::exp(-r * (xi - p.xi0));
  double D = p.U0 * A * E + p.kappa * p.nu * p.nu;
  ShockChain s;
  s.U = std::pow(A / D, m);
  s.g = -r * p.U0 * A * E / D;
  s.g1 = -r * s.g - s.g * s.g;
  s.g2 = -r * s.g1 - 2 * s.g * s.g1;
  s.U1 = -m * s.U * s.g;
  s.U2 = -m * (s.U1 * s.g + s.U * s.g1);
  s.U3 = -m * (s.U2 * s.g + 2 * s.U1 * s.g1 + s.U * s.g2);
  return s;
}

}  // namespace

double shock_closed_form(double xi, const TWParams& p) { return chain(xi, p).U; }

double shock_derivative(double xi, const TWParams& p, int order) {
  ShockChain s = chain(xi, p);
  switch (order) {
    case 1: return s.U1;
    case 2: return s.U2;
    case 3: return s.U3;
    default: throw std::invalid_argument("shock_derivative: order must be 1..3");
  }
}

namespace {

double ode2_denominator(double U, const TWParams& p) {
  return (p.nu * p.nu - p.c * p.c) * U +
         p.nu * p.nu * p.kappa * std::pow(U, p.n) + p.C1 * U + p.C0;
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6 * (fa + 4 * flm + fm);
  double right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth <= 0) throw std::runtime_error("quadrature_xi: depth exhausted");
  if (std::abs(left + right - whole) <= 15 * tol)
    return left + right + (left + right - whole) / 15;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

}  // namespace

double quadrature_xi(double U_from, double U_to, const TWParams& p) {
  if (U_from == U_to) return 0;
  double lo = std::min(U_from, U_to), hi = std::max(U_from, U_to);
  if (p.C0 == 0 && p.C1 == 0) {
    // The integrand blows up at the equilibria U = 0 and U = amplitude;
    // refuse evaluation points within 1e-6 of the amplitude scale.
    double amp = p.amplitude();
    double guard = 1e-6 * amp;
    for (double end : {U_from, U_to})
      if (std::abs(end) < guard || std::abs(end - amp) < guard)
        throw std::domain_error(
            "quadrature_xi: endpoint too close to an equilibrium");
  }
  // Reject intervals crossing an equilibrium: scan for sign changes of the
  // denominator, excluding roots that sit exactly at an endpoint.
  constexpr int kScan = 2048;
  double prev = ode2_denominator(lo, p);
  if (prev == 0) throw std::domain_error("quadrature_xi: equilibrium endpoint");
  for (int i = 1; i <= kScan; ++i) {
    double u = lo + (hi - lo) * i / kScan;
    double cur = ode2_denominator(u, p);
    if (cur == 0 || cur * prev < 0)
      throw std::domain_error(
          "quadrature_xi: denominator root inside the interval");
    prev = cur;
  }
  std::function<double(double)> f = [&](double u) {
    return p.beta * p.nu / ode2_denominator(u, p);
  };
  double fa = f(U_from), fb = f(U_to), fm = f(0.5 * (U_from + U_to));
  double whole = (U_to - U_from) / 6 * (fa + 4 * fm + fb);
  double integral = adaptive_simpson(f, U_from, U_to, fa, fm, fb, whole,
                                     1e-10, 60);
  // The profile satisfies the quadrature identity integral = -(xi - xi0).
  return -integral;
}

double residual_check(const TWParams& p, const std::vector<double>& xis) {
  double worst = 0;
  for (double xi : xis) {
    ShockChain s = chain(xi, p);
    double r = p.beta * p.nu * s.U1 +
               p.nu * p.nu * p.kappa * std::pow(s.U, p.n) +
               (p.nu * p.nu - p.c * p.c) * s.U;
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double residual_check_third(const TWParams& p, const std::vector<double>& xis) {
  double worst = 0;
  for (double xi : xis) {
    ShockChain s = chain(xi, p);
    double h1 = p.kappa * p.n * std::pow(s.U, p.n - 1);
    double h2 = p.kappa * p.n * (p.n - 1) * std::pow(s.U, p.n - 2);
    double r = p.beta * p.nu * s.U3 + (p.nu * p.nu - p.c * p.c) * s.U2 +
               p.nu * p.nu * (h1 * s.U2 + h2 * s.U1 * s.U1);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

std::vector<ProfileRow> profile_table(const TWParams& p, double xi_min,
                                      double xi_max, int samples) {
  if (samples < 2) throw std::invalid_argument("profile_table: samples < 2");
  std::vector<ProfileRow> rows;
  rows.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    double xi = xi_min + (xi_max - xi_min) * i / (samples - 1);
    rows.push_back({xi, shock_closed_form(xi, p)});
  }
  return rows;
}

std::vector<SpaceTimeRow> space_time_table(const TWParams& p,
                                           const std::vector<double>& times,
                                           double x_min, double x_max,
                                           int samples) {
  if (samples < 2) throw std::invalid_argument("space_time_table: samples < 2");
  std::vector<SpaceTimeRow> rows;
  rows.reserve(times.size() * samples);
  for (double t : times)
    for (int i = 0; i < samples; ++i) {
      double x = x_min + (x_max - x_min) * i / (samples - 1);
      rows.push_back({t, x, shock_closed_form(x - p.nu * t, p)});
    }
  return rows;
}

}  // namespace wv
