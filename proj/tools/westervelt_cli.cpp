#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wv/conslaw.hpp"
#include "wv/fdsim.hpp"
#include "wv/parser.hpp"
#include "wv/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace wv;

namespace {

constexpr int kUsageError = 2;

void write_file(const fs::path& dir, const std::string& name,
                const std::string& content) {
  fs::create_directories(dir);
  std::ofstream out(dir / name);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  std::cerr << "wrote " << (dir / name).string() << "\n";
}

int cmd_verify(const VerifyOptions& opt, const std::string& out_dir) {
  auto results = run_verification(opt);
  if (results.empty()) {
    std::cerr << "error: no claims match the given filter\n";
    return kUsageError;
  }
  std::string report = format_report(results);
  std::cout << report;
  if (!out_dir.empty()) {
    write_file(out_dir, "report.txt", report);
    write_file(out_dir, "claims.csv", format_csv(results));
  }
  return all_pass(results) ? 0 : 1;
}

int cmd_derive(const std::string& system, int order, int coeff_degree,
               const std::string& out_dir) {
  auto sys = system_by_name(system);
  MultiplierAnsatz ma;
  ma.jet_order = order;
  ma.coeff_deg_t = coeff_degree;
  ma.coeff_deg_x = coeff_degree;
  auto basis = find_multipliers(sys, ma);
  std::ostringstream os;
  os << "system " << system << ": " << basis.size()
     << " independent multiplier(s)\n";
  for (size_t i = 0; i < basis.size(); ++i) {
    os << "Q" << i + 1 << " = (";
    for (size_t j = 0; j < basis[i].size(); ++j)
      os << (j ? ", " : "") << basis[i][j].str();
    os << ")\n";
    try {
      ConsLaw law = flux_reconstruct(basis[i], sys);
      os << "  T   = " << law.T.str() << "\n";
      os << "  Phi = " << law.Phi.str() << "\n";
    } catch (const std::exception& e) {
      os << "  flux reconstruction unavailable: " << e.what() << "\n";
    }
  }
  std::cout << os.str();
  if (!out_dir.empty()) write_file(out_dir, "multipliers.txt", os.str());
  return 0;
}

int cmd_shock(const TWParams& p, double xi_min, double xi_max, int samples,
              const std::vector<double>& times, const std::string& out_path,
              const std::string& out_dir) {
  p.validate_shock();
  std::ostringstream os;
  os.precision(17);
  size_t count = 0;
  if (times.empty()) {
    auto rows = profile_table(p, xi_min, xi_max, samples);
    os << "xi,U\n";
    for (const auto& r : rows) os << r.xi << "," << r.U << "\n";
    count = rows.size();
  } else {
    auto rows = space_time_table(p, times, xi_min, xi_max, samples);
    os << "t,x,U\n";
    for (const auto& r : rows)
      os << r.t << "," << r.x << "," << r.U << "\n";
    count = rows.size();
  }
  std::cout << "amplitude = " << p.amplitude() << ", " << count
            << " samples on [" << xi_min << ", " << xi_max << "]\n";
  if (!out_path.empty()) {
    fs::path f(out_path);
    if (f.has_parent_path()) fs::create_directories(f.parent_path());
    std::ofstream out(f);
    out << os.str();
    std::cerr << "wrote " << out_path << "\n";
  } else {
    write_file(out_dir.empty() ? "." : out_dir, "profile.csv", os.str());
  }
  return 0;
}

FSpec fspec_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  auto rat = [&](const char* key, const Rational& dflt) {
    if (!j.contains(key)) return dflt;
    if (j.at(key).is_string()) return Rational(j.at(key).get<std::string>());
    return Rational(j.at(key).get<long>());
  };
  if (kind == "westervelt-poly")
    return FSpec::westervelt_poly(rat("kappa", Rational(1)),
                                  rat("n", Rational(2)));
  if (kind == "power-law")
    return FSpec::power_law(rat("k", Rational(1)), rat("p0", Rational(0)),
                            rat("q", Rational(1)));
  if (kind == "inverse-cube")
    return FSpec::inverse_cube(rat("k", Rational(1)), rat("p0", Rational(0)));
  throw std::invalid_argument("unknown family kind '" + kind + "'");
}

GridConfig config_from_json(const json& j) {
  GridConfig cfg;
  static const std::set<std::string> known = {
      "x_min", "x_max", "n", "dt", "t_end", "bc", "f", "monitor_stride",
      "c", "beta", "init", "shock", "pulse_amplitude", "pulse_width",
      "pulse_center"};
  for (const auto& [key, val] : j.items())
    if (!known.count(key))
      throw std::invalid_argument("unknown config key '" + key + "'");
  if (j.contains("x_min")) cfg.x_min = j["x_min"].get<double>();
  if (j.contains("x_max")) cfg.x_max = j["x_max"].get<double>();
  if (j.contains("n")) cfg.N = j["n"].get<int>();
  if (j.contains("dt")) {
    if (j["dt"].is_string()) {
      if (j["dt"].get<std::string>() != "auto")
        throw std::invalid_argument("dt must be a number or \"auto\"");
      cfg.dt = 0;
    } else {
      cfg.dt = j["dt"].get<double>();
    }
  }
  if (j.contains("t_end")) cfg.t_end = j["t_end"].get<double>();
  if (j.contains("bc")) {
    std::string bc = j["bc"].get<std::string>();
    if (bc == "periodic")
      cfg.bc = BoundaryKind::Periodic;
    else if (bc == "dirichlet-exact")
      cfg.bc = BoundaryKind::DirichletExact;
    else
      throw std::invalid_argument("bc must be periodic or dirichlet-exact");
  }
  if (j.contains("f")) cfg.f = fspec_from_json(j["f"]);
  if (j.contains("monitor_stride"))
    cfg.monitor_stride = j["monitor_stride"].get<int>();
  if (j.contains("c")) cfg.c = j["c"].get<double>();
  if (j.contains("beta")) cfg.beta = j["beta"].get<double>();
  if (j.contains("init")) {
    std::string init = j["init"].get<std::string>();
    if (init == "shock")
      cfg.init = InitKind::Shock;
    else if (init == "pulse")
      cfg.init = InitKind::Pulse;
    else
      throw std::invalid_argument("init must be shock or pulse");
  }
  if (j.contains("shock")) {
    const json& s = j["shock"];
    static const std::set<std::string> sk = {"nu", "u0", "xi0", "kappa", "n"};
    for (const auto& [key, val] : s.items())
      if (!sk.count(key))
        throw std::invalid_argument("unknown shock key '" + key + "'");
    if (s.contains("nu")) cfg.shock.nu = s["nu"].get<double>();
    if (s.contains("u0")) cfg.shock.U0 = s["u0"].get<double>();
    if (s.contains("xi0")) cfg.shock.xi0 = s["xi0"].get<double>();
    if (s.contains("kappa")) cfg.shock.kappa = s["kappa"].get<double>();
    if (s.contains("n")) cfg.shock.n = s["n"].get<double>();
  }
  cfg.shock.c = cfg.c;
  cfg.shock.beta = cfg.beta;
  if (j.contains("pulse_amplitude"))
    cfg.pulse_amplitude = j["pulse_amplitude"].get<double>();
  if (j.contains("pulse_width")) cfg.pulse_width = j["pulse_width"].get<double>();
  if (j.contains("pulse_center"))
    cfg.pulse_center = j["pulse_center"].get<double>();
  return cfg;
}

std::string monitors_csv(const MonitorReport& rep) {
  std::ostringstream os;
  os.precision(17);
  os << "t,C1,C2,C3,C4,drift1,drift2,drift3,drift4,errLinf,errL2\n";
  for (const auto& r : rep.rows) {
    os << r.t;
    for (double c : r.C) os << "," << c;
    for (double d : r.drift) os << "," << d;
    os << "," << r.errLinf << "," << r.errL2 << "\n";
  }
  return os.str();
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot read config " << config_path << "\n";
    return kUsageError;
  }
  json j = json::parse(in);
  GridConfig cfg = config_from_json(j);
  auto [state, rep] = run(cfg);
  std::ostringstream os;
  os.precision(17);
  os << "x,p,q\n";
  for (int i = 0; i <= cfg.N; ++i)
    os << cfg.x_min + i * cfg.dx() << "," << state.p[i] << "," << state.q[i]
       << "\n";
  std::string dir = out_dir.empty() ? "." : out_dir;
  std::ostringstream name;
  name << "state_" << state.t << ".csv";
  write_file(dir, name.str(), os.str());
  write_file(dir, "monitors.csv", monitors_csv(rep));
  const auto& last = rep.rows.back();
  std::cout << "t = " << state.t << ", C1 drift = " << last.drift[0]
            << ", errLinf = " << last.errLinf << "\n";
  return 0;
}

int cmd_convergence(GridConfig cfg, const std::vector<int>& grids,
                    const std::string& out_dir) {
  auto res = convergence_order(cfg, grids);
  std::ostringstream os;
  os << "N,dx,errLinf\n";
  os.precision(17);
  for (size_t i = 0; i < res.grids.size(); ++i)
    os << res.grids[i] << "," << (cfg.x_max - cfg.x_min) / res.grids[i] << ","
       << res.errors[i] << "\n";
  std::cout << os.str();
  std::cout << "observed order = " << res.order
            << (res.monotone ? "" : "  (warning: non-monotone errors)") << "\n";
  if (!out_dir.empty()) write_file(out_dir, "convergence.csv", os.str());
  return res.monotone && res.order > 1.5 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Symmetry, conservation-law, and travelling-wave toolkit for the "
      "nonlinear acoustic pressure equation f(p)_tt - beta p_xxt = c^2 p_xx"};
  app.require_subcommand(1);
  std::string out_dir;
  unsigned seed = 0;
  int samples = 401;
  app.add_option("--out-dir", out_dir, "directory for output files");
  app.add_option("--seed", seed, "seed for randomized property checks");
  app.add_option("--samples", samples, "sample count for tabulated output");

  auto* verify = app.add_subcommand("verify", "run the claim registry");
  bool v_all = false;
  VerifyOptions vopt;
  bool v_laws = false, v_sym = false, v_shock = false;
  verify->add_flag("--all", v_all, "verify every claim (default)");
  verify->add_option("--system", vopt.system,
                     "restrict to one system (main, pot1.l1, pot1.l2, "
                     "pot2.l1, pot2.l2, tws)");
  verify->add_flag("--laws", v_laws, "conservation laws and multipliers only");
  verify->add_flag("--symmetries", v_sym, "symmetry claims only");
  verify->add_flag("--shock", v_shock, "travelling-wave claims only");
  verify->add_flag("--mutate-flux-sign", vopt.mutate_flux_sign,
                   "negative control: flip the mass-rate flux sign");
  verify->add_flag("--mutate-characteristic", vopt.mutate_characteristic,
                   "negative control: perturb the time-shift symmetry");

  auto* derive = app.add_subcommand(
      "derive", "search for conservation-law multipliers and fluxes");
  std::string d_system = "westervelt";
  int d_order = 2, d_cdeg = 1;
  derive->add_option("--system", d_system, "system name");
  derive->add_option("--order", d_order, "max jet order in the ansatz");
  derive->add_option("--coeff-degree", d_cdeg,
                     "max degree in t and x of the coefficients");

  auto* shock = app.add_subcommand("shock", "tabulate the shock profile");
  TWParams tw;
  double xi_min = -10, xi_max = 10;
  std::string s_out;
  shock->add_option("--n", tw.n, "nonlinearity exponent (> 1)");
  shock->add_option("--c", tw.c, "sound speed");
  shock->add_option("--nu", tw.nu, "wave speed");
  shock->add_option("--beta", tw.beta, "diffusivity");
  shock->add_option("--kappa", tw.kappa, "nonlinearity coefficient");
  shock->add_option("--u0", tw.U0, "integration constant U0");
  shock->add_option("--xi0", tw.xi0, "profile offset");
  shock->add_option("--xi-min", xi_min, "left end of the table");
  shock->add_option("--xi-max", xi_max, "right end of the table");
  shock->add_option("--out", s_out, "output CSV path (default profile.csv)");
  std::vector<double> s_times;
  shock->add_option("--times", s_times,
                    "emit t,x,U rows at these times instead of the xi table");

  auto* simulate = app.add_subcommand("simulate", "integrate an initial-value run");
  std::string config_path;
  simulate->add_option("--config", config_path, "JSON run configuration")
      ->required();

  auto* conv = app.add_subcommand("convergence",
                                  "grid-refinement study against the shock");
  std::vector<int> grids = {100, 200, 400};
  GridConfig ccfg;
  conv->add_option("--grids", grids, "grid sizes (cells)");
  conv->add_option("--n", ccfg.shock.n, "nonlinearity exponent");
  conv->add_option("--c", ccfg.c, "sound speed");
  conv->add_option("--beta", ccfg.beta, "diffusivity");
  conv->add_option("--t-end", ccfg.t_end, "final time");

  auto* report = app.add_subcommand(
      "report", "full verification with report files");

  // let the global flags appear after the subcommand name
  for (auto* sc : {verify, derive, shock, simulate, conv, report})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (verify->parsed() || report->parsed()) {
      if (v_laws || v_sym || v_shock) {
        vopt.laws = v_laws;
        vopt.symmetries = v_sym;
        vopt.shock = v_shock;
      }
      if (report->parsed() && out_dir.empty()) out_dir = ".";
      return cmd_verify(vopt, out_dir);
    }
    if (derive->parsed()) return cmd_derive(d_system, d_order, d_cdeg, out_dir);
    if (shock->parsed())
      return cmd_shock(tw, xi_min, xi_max, samples, s_times, s_out, out_dir);
    if (simulate->parsed()) return cmd_simulate(config_path, out_dir);
    if (conv->parsed()) {
      ccfg.shock.c = ccfg.c;
      ccfg.shock.beta = ccfg.beta;
      ccfg.f = FSpec::westervelt_poly(
          Rational(1), Rational(static_cast<long>(ccfg.shock.n)));
      return cmd_convergence(ccfg, grids, out_dir);
    }
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsageError;
}
