#ifndef WV_FDSIM_HPP
#define WV_FDSIM_HPP

#include <array>
#include <vector>

#include "wv/fspec.hpp"
#include "wv/tws.hpp"

namespace wv {

// Method-of-lines solver for f(p)_tt - beta p_xxt = c^2 p_xx written as
//   p_t = q,  q_t = (c^2 d2p + beta d2q - f''(p) q^2) / f'(p)
// with second-order central stencils and classical RK4 in time.

enum class BoundaryKind { Periodic, DirichletExact };
enum class InitKind { Shock, Pulse };

struct GridConfig {
  double x_min = -20;
  double x_max = 20;
  int N = 400;       // cells; nodes are 0..N
  double dt = 0;     // 0 selects the automatic stability bound
  double t_end = 1;
  BoundaryKind bc = BoundaryKind::DirichletExact;
  FSpec f = FSpec::westervelt_poly(Rational(1), Rational(2));
  int monitor_stride = 10;
  double c = 2;
  double beta = 1;

  InitKind init = InitKind::Shock;
  TWParams shock;  // initial/boundary data and exact-error reference
  double pulse_amplitude = 0.1;
  double pulse_width = 2;
  double pulse_center = 0;

  double dx() const { return (x_max - x_min) / N; }
  double auto_dt() const;
  void validate() const;
};

struct GridState {
  double t = 0;
  std::vector<double> p;
  std::vector<double> q;  // p_t samples
};

struct MonitorRow {
  double t;
  std::array<double, 4> C;      // conserved integrals C1..C4
  std::array<double, 4> drift;  // |C(t) - C(0) + time integral of net flux|
  double errLinf;               // NaN when no exact solution applies
  double errL2;
};

struct MonitorReport {
  std::vector<MonitorRow> rows;
};

GridState initial_state(const GridConfig& cfg);

// Spatial semidiscretization. Boundary rows follow cfg.bc: periodic wrap, or
// time derivatives of the exact shock data.
void rhs_eval(const GridState& s, const GridConfig& cfg, std::vector<double>& dp,
              std::vector<double>& dq);

// One RK4 step of size dt. flux_accum (4 entries, may be null) receives the
// time integral of the net boundary flux per conservation law, accumulated
// with the same RK4 stage weights.
void step_rk4(GridState& s, const GridConfig& cfg, double dt,
              std::array<double, 4>* flux_accum);

std::pair<GridState, MonitorReport> run(const GridConfig& cfg);

// Conserved integrals of the current state (trapezoid rule).
std::array<double, 4> conserved_integrals(const GridState& s,
                                          const GridConfig& cfg);
// Net boundary flux Phi(x_max) - Phi(x_min) per law.
std::array<double, 4> boundary_flux(const GridState& s, const GridConfig& cfg);

struct ConvergenceResult {
  std::vector<int> grids;
  std::vector<double> errors;  // final-time Linf error per grid
  double order;                // least-squares slope of log err vs log dx
  bool monotone;
};
ConvergenceResult convergence_order(const GridConfig& cfg,
                                    const std::vector<int>& grids);

}  // namespace wv

#endif
