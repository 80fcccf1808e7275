#ifndef WV_TWS_HPP
#define WV_TWS_HPP

#include <vector>

#include "wv/fspec.hpp"

namespace wv {

// Parameters of the travelling-wave reduction p = U(xi), xi = x - nu t.
// The shock branch requires n > 1, U0 > 0, kappa > 0 and c^2 - nu^2 > 0.
struct TWParams {
  double c = 2;
  double nu = 1;
  double beta = 1;
  double kappa = 1;
  double n = 2;
  double U0 = 1;
  double xi0 = 0;
  double C0 = 0;
  double C1 = 0;

  void validate_shock() const;  // throws std::domain_error off the branch
  double amplitude() const;     // ((c^2 - nu^2)/(kappa nu^2))^(1/(n-1))
};

// Symbolic travelling-wave ODE forms, written on the jet of U (stored as the
// pressure variable, with x playing the role of xi):
//   third_order: beta nu U''' + (nu^2 - c^2) U'' + nu^2 (h'(U)U'' + h''(U)U'^2)
//   first_order: beta nu U' + (nu^2 - c^2) U + nu^2 h(U) + C1 U + C0
// h is the nonlinear part of f; Generic keeps opaque h-symbols,
// WesterveltPoly substitutes kappa U^n.
struct OdeForms {
  JetExpr third_order;
  JetExpr first_order;
};
OdeForms reduce_to_ode(const FSpec& h_part = FSpec::generic());

// Closed-form Bernoulli shock profile and its analytic xi-derivatives.
double shock_closed_form(double xi, const TWParams& p);
double shock_derivative(double xi, const TWParams& p, int order);  // 1..3

// Signed xi difference recovered by adaptive Simpson quadrature of
// beta nu / ((nu^2 - c^2)U + nu^2 kappa U^n + C1 U + C0) over [U_from, U_to].
// Absolute tolerance 1e-10. Throws if the integrand has an equilibrium root
// inside the interval.
double quadrature_xi(double U_from, double U_to, const TWParams& p);

// Max |beta nu U' + nu^2 kappa U^n + (nu^2 - c^2) U| over the samples,
// using the closed form and its analytic derivative.
double residual_check(const TWParams& p, const std::vector<double>& xis);
// Same for the third-order form (analytic derivatives up to U''').
double residual_check_third(const TWParams& p, const std::vector<double>& xis);

struct ProfileRow {
  double xi;
  double U;
};
std::vector<ProfileRow> profile_table(const TWParams& p, double xi_min,
                                      double xi_max, int samples);

struct SpaceTimeRow {
  double t;
  double x;
  double U;
};
// Rows (t, x, U(x - nu t)) over the given times and a uniform x grid.
std::vector<SpaceTimeRow> space_time_table(const TWParams& p,
                                           const std::vector<double>& times,
                                           double x_min, double x_max,
                                           int samples);

}  // namespace wv

#endif
