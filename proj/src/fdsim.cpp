#include "wv/fdsim.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wv {

double GridConfig::auto_dt() const {
  double h = dx();
  return std::min(0.25 * h * h / std::max(beta, 1.0), 0.5 * h / c);
}

void GridConfig::validate() const {
  if (N < 16) throw std::invalid_argument("grid: N must be >= 16");
  if (x_max <= x_min) throw std::invalid_argument("grid: empty domain");
  if (t_end < 0) throw std::invalid_argument("grid: t_end must be >= 0");
  if (dt < 0) throw std::invalid_argument("grid: dt must be > 0 or 0 (auto)");
  if (f.is_generic())
    throw std::invalid_argument("grid: the family must be concrete");
  if (init == InitKind::Shock) {
    shock.validate_shock();
    if (shock.c != c || shock.beta != beta)
      throw std::invalid_argument("grid: shock parameters disagree with c/beta");
    if (f.kind != FSpec::Kind::WesterveltPoly || !f.kappa ||
        to_double(*f.kappa) != shock.kappa || to_double(f.n) != shock.n)
      throw std::invalid_argument(
          "grid: shock init needs f = p + kappa p^n with matching kappa, n");
  }
  if (bc == BoundaryKind::DirichletExact && init != InitKind::Shock)
    throw std::invalid_argument("grid: exact boundary data needs shock init");
}

namespace {

constexpr double kHypEps = 1e-10;

// Family constants lowered to doubles once per sweep; deriv_value converts
// from exact rationals on every call, which dominates the stencil loop.
struct FamilyNum {
  bool poly;              // z + kappa z^n vs k (z + p0)^(1+q)
  double coeff[3];        // per-order leading coefficient
  double expo;            // base exponent (n or 1+q)
  double p0;

  explicit FamilyNum(const FSpec& f) {
    poly = f.kind == FSpec::Kind::WesterveltPoly;
    if (poly) {
      if (!f.kappa) throw std::domain_error("FamilyNum: symbolic kappa");
      double kap = to_double(*f.kappa);
      double n = to_double(f.n);
      expo = n;
      p0 = 0;
      coeff[0] = kap;
      coeff[1] = kap * n;
      coeff[2] = kap * n * (n - 1);
    } else {
      double k = to_double(f.k);
      double e = 1 + to_double(f.q);
      expo = e;
      p0 = to_double(f.p0);
      coeff[0] = k;
      coeff[1] = k * e;
      coeff[2] = k * e * (e - 1);
    }
  }

  double d(int order, double z) const {
    if (poly) {
      double nl = coeff[order] * std::pow(z, expo - order);
      if (order == 0) return z + nl;
      if (order == 1) return 1 + nl;
      return nl;
    }
    return coeff[order] * std::pow(z + p0, expo - order);
  }
};

double exact_p(const GridConfig& cfg, double t, double x) {
  return shock_closed_form(x - cfg.shock.nu * t, cfg.shock);
}
double exact_q(const GridConfig& cfg, double t, double x) {
  return -cfg.shock.nu * shock_derivative(x - cfg.shock.nu * t, cfg.shock, 1);
}

void check_finite(const GridState& s) {
  for (size_t i = 0; i < s.p.size(); ++i)
    if (!std::isfinite(s.p[i]) || !std::isfinite(s.q[i]))
      throw std::runtime_error("simulation diverged at node " +
                               std::to_string(i) + ", t = " +
                               std::to_string(s.t));
}

}  // namespace

GridState initial_state(const GridConfig& cfg) {
  cfg.validate();
  GridState s;
  s.t = 0;
  s.p.resize(cfg.N + 1);
  s.q.resize(cfg.N + 1);
  for (int i = 0; i <= cfg.N; ++i) {
    double x = cfg.x_min + i * cfg.dx();
    if (cfg.init == InitKind::Shock) {
      s.p[i] = exact_p(cfg, 0, x);
      s.q[i] = exact_q(cfg, 0, x);
    } else {
      double z = (x - cfg.pulse_center) / cfg.pulse_width;
      s.p[i] = cfg.pulse_amplitude * std::exp(-z * z);
      s.q[i] = 0;
    }
  }
  return s;
}

void rhs_eval(const GridState& s, const GridConfig& cfg, std::vector<double>& dp,
              std::vector<double>& dq) {
  int N = cfg.N;
  double h = cfg.dx();
  double c2 = cfg.c * cfg.c;
  dp.assign(N + 1, 0);
  dq.assign(N + 1, 0);
  FamilyNum fam(cfg.f);
  auto interior = [&](int i, int im, int ip) {
    double d2p = (s.p[ip] - 2 * s.p[i] + s.p[im]) / (h * h);
    double d2q = (s.q[ip] - 2 * s.q[i] + s.q[im]) / (h * h);
    double f1 = fam.d(1, s.p[i]);
    if (f1 < kHypEps)
      throw std::runtime_error("hyperbolicity guard: f'(p) < eps at node " +
                               std::to_string(i));
    double f2 = fam.d(2, s.p[i]);
    dp[i] = s.q[i];
    dq[i] = (c2 * d2p + cfg.beta * d2q - f2 * s.q[i] * s.q[i]) / f1;
  };
  for (int i = 1; i < N; ++i) interior(i, i - 1, i + 1);
  if (cfg.bc == BoundaryKind::Periodic) {
    // Node N is identified with node 0.
    interior(0, N - 1, 1);
    dp[N] = dp[0];
    dq[N] = dq[0];
  } else {
    // Boundary values track the exact travelling front.
    dp[0] = exact_q(cfg, s.t, cfg.x_min);
    dq[0] = cfg.shock.nu * cfg.shock.nu *
            shock_derivative(cfg.x_min - cfg.shock.nu * s.t, cfg.shock, 2);
    dp[N] = exact_q(cfg, s.t, cfg.x_max);
    dq[N] = cfg.shock.nu * cfg.shock.nu *
            shock_derivative(cfg.x_max - cfg.shock.nu * s.t, cfg.shock, 2);
  }
}

std::array<double, 4> conserved_integrals(const GridState& s,
                                          const GridConfig& cfg) {
  // Densities: T1 = f'(p)q, T2 = -f(p) + t T1, T3 = x T1, T4 = x(t T1 - f(p)).
  std::array<double, 4> C{0, 0, 0, 0};
  double h = cfg.dx();
  FamilyNum fam(cfg.f);
  for (int i = 0; i <= cfg.N; ++i) {
    double x = cfg.x_min + i * h;
    double fp = fam.d(0, s.p[i]);
    double T1 = fam.d(1, s.p[i]) * s.q[i];
    double w = (i == 0 || i == cfg.N) ? 0.5 * h : h;
    C[0] += w * T1;
    C[1] += w * (s.t * T1 - fp);
    C[2] += w * x * T1;
    C[3] += w * x * (s.t * T1 - fp);
  }
  return C;
}

namespace {

// One-sided second-order x-derivative at a boundary node.
double dx_left(const std::vector<double>& y, double h) {
  return (-3 * y[0] + 4 * y[1] - y[2]) / (2 * h);
}
double dx_right(const std::vector<double>& y, double h) {
  size_t n = y.size() - 1;
  return (3 * y[n] - 4 * y[n - 1] + y[n - 2]) / (2 * h);
}

}  // namespace

std::array<double, 4> boundary_flux(const GridState& s, const GridConfig& cfg) {
  double h = cfg.dx();
  double c2 = cfg.c * cfg.c;
  int N = cfg.N;
  double px_l, qx_l, px_r, qx_r;
  if (cfg.bc == BoundaryKind::Periodic) {
    px_l = (s.p[1] - s.p[N - 1]) / (2 * h);
    qx_l = (s.q[1] - s.q[N - 1]) / (2 * h);
    px_r = px_l;
    qx_r = qx_l;
  } else {
    px_l = dx_left(s.p, h);
    qx_l = dx_left(s.q, h);
    px_r = dx_right(s.p, h);
    qx_r = dx_right(s.q, h);
  }
  // Phi1 = -c^2 p_x - beta q_x; Phi2 = t Phi1;
  // Phi3 = c^2(p - x p_x) + beta(q - x q_x); Phi4 = t Phi3|.
  auto phis = [&](double x, double p, double q, double px, double qx) {
    std::array<double, 4> out;
    out[0] = -c2 * px - cfg.beta * qx;
    out[1] = s.t * out[0];
    out[2] = c2 * (p - x * px) + cfg.beta * (q - x * qx);
    out[3] = s.t * out[2];
    return out;
  };
  auto l = phis(cfg.x_min, s.p[0], s.q[0], px_l, qx_l);
  auto r = phis(cfg.x_max, s.p[N], s.q[N], px_r, qx_r);
  std::array<double, 4> net;
  for (int k = 0; k < 4; ++k) net[k] = r[k] - l[k];
  return net;
}

void step_rk4(GridState& s, const GridConfig& cfg, double dt,
              std::array<double, 4>* flux_accum) {
  int n = cfg.N + 1;
  static thread_local std::vector<double> k1p, k1q, k2p, k2q, k3p, k3q, k4p, k4q;
  GridState tmp;
  tmp.p.resize(n);
  tmp.q.resize(n);

  std::array<double, 4> fsum{0, 0, 0, 0};
  auto add_flux = [&](const GridState& st, double w) {
    if (!flux_accum) return;
    auto f = boundary_flux(st, cfg);
    for (int k = 0; k < 4; ++k) fsum[k] += w * f[k];
  };

  rhs_eval(s, cfg, k1p, k1q);
  add_flux(s, 1.0);
  tmp.t = s.t + 0.5 * dt;
  for (int i = 0; i < n; ++i) {
    tmp.p[i] = s.p[i] + 0.5 * dt * k1p[i];
    tmp.q[i] = s.q[i] + 0.5 * dt * k1q[i];
  }
  rhs_eval(tmp, cfg, k2p, k2q);
  add_flux(tmp, 2.0);
  for (int i = 0; i < n; ++i) {
    tmp.p[i] = s.p[i] + 0.5 * dt * k2p[i];
    tmp.q[i] = s.q[i] + 0.5 * dt * k2q[i];
  }
  rhs_eval(tmp, cfg, k3p, k3q);
  add_flux(tmp, 2.0);
  tmp.t = s.t + dt;
  for (int i = 0; i < n; ++i) {
    tmp.p[i] = s.p[i] + dt * k3p[i];
    tmp.q[i] = s.q[i] + dt * k3q[i];
  }
  rhs_eval(tmp, cfg, k4p, k4q);
  add_flux(tmp, 1.0);

  for (int i = 0; i < n; ++i) {
    s.p[i] += dt / 6 * (k1p[i] + 2 * k2p[i] + 2 * k3p[i] + k4p[i]);
    s.q[i] += dt / 6 * (k1q[i] + 2 * k2q[i] + 2 * k3q[i] + k4q[i]);
  }
  s.t += dt;
  if (flux_accum)
    for (int k = 0; k < 4; ++k) (*flux_accum)[k] += dt / 6 * fsum[k];
  check_finite(s);
}

namespace {

MonitorRow make_row(const GridState& s, const GridConfig& cfg,
                    const std::array<double, 4>& C0,
                    const std::array<double, 4>& flux_int) {
  MonitorRow row;
  row.t = s.t;
  row.C = conserved_integrals(s, cfg);
  for (int k = 0; k < 4; ++k)
    row.drift[k] = std::abs(row.C[k] - C0[k] + flux_int[k]);
  if (cfg.init == InitKind::Shock) {
    double linf = 0, l2 = 0;
    double h = cfg.dx();
    for (int i = 0; i <= cfg.N; ++i) {
      double x = cfg.x_min + i * h;
      double e = s.p[i] - exact_p(cfg, s.t, x);
      linf = std::max(linf, std::abs(e));
      l2 += ((i == 0 || i == cfg.N) ? 0.5 : 1.0) * h * e * e;
    }
    row.errLinf = linf;
    row.errL2 = std::sqrt(l2);
  } else {
    row.errLinf = std::numeric_limits<double>::quiet_NaN();
    row.errL2 = std::numeric_limits<double>::quiet_NaN();
  }
  return row;
}

}  // namespace

std::pair<GridState, MonitorReport> run(const GridConfig& cfg) {
  GridState s = initial_state(cfg);
  MonitorReport rep;
  std::array<double, 4> C0 = conserved_integrals(s, cfg);
  std::array<double, 4> flux_int{0, 0, 0, 0};
  rep.rows.push_back(make_row(s, cfg, C0, flux_int));
  if (cfg.t_end == 0) return {std::move(s), std::move(rep)};

  double dt = cfg.dt > 0 ? cfg.dt : cfg.auto_dt();
  long steps = static_cast<long>(std::ceil(cfg.t_end / dt - 1e-12));
  dt = cfg.t_end / steps;  // land exactly on t_end
  int stride = std::max(cfg.monitor_stride, 1);
  for (long k = 0; k < steps; ++k) {
    step_rk4(s, cfg, dt, &flux_int);
    if ((k + 1) % stride == 0 || k + 1 == steps)
      rep.rows.push_back(make_row(s, cfg, C0, flux_int));
  }
  return {std::move(s), std::move(rep)};
}

ConvergenceResult convergence_order(const GridConfig& cfg,
                                    const std::vector<int>& grids) {
  if (cfg.init != InitKind::Shock)
    throw std::invalid_argument("convergence_order: needs the exact shock");
  if (grids.size() < 2)
    throw std::invalid_argument("convergence_order: needs >= 2 grids");
  ConvergenceResult res;
  res.grids = grids;
  for (int N : grids) {
    GridConfig c = cfg;
    c.N = N;
    c.dt = 0;
    auto [state, rep] = run(c);
    res.errors.push_back(rep.rows.back().errLinf);
  }
  res.monotone = true;
  for (size_t i = 1; i < res.errors.size(); ++i)
    res.monotone = res.monotone && res.errors[i] < res.errors[i - 1];
  // Least-squares slope of log(err) against log(dx).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  size_t n = grids.size();
  for (size_t i = 0; i < n; ++i) {
    double lx = std::log((cfg.x_max - cfg.x_min) / grids[i]);
    double ly = std::log(res.errors[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  res.order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return res;
}

}  // namespace wv
