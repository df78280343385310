#include "pext/cli.hpp"

#include "pext/cohomology.hpp"
#include "pext/dynamics.hpp"
#include "pext/group.hpp"
#include "pext/irreps.hpp"
#include "pext/orbits.hpp"
#include "pext/polynomial.hpp"
#include "pext/quadrature.hpp"
#include "pext/quantization.hpp"
#include "pext/suites.hpp"
#include "pext/wavefunction.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pext::cli {
namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double B = 1.0;
  double hbar = 1.0;
  double m = 1.0;
  std::uint64_t seed = 42;
  std::string format;
  std::string output;
  ModelParams model() const { return ModelParams(B, hbar); }
};

struct Outcome {
  std::string text;
  int code = kExitOk;
};

std::vector<double> parse_list(const std::string& text, std::size_t n, const std::string& flag) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError(flag + ": not a number: '" + item + "'");
    v.push_back(x);
  }
  if (v.size() != n) throw UsageError(flag + ": expected " + std::to_string(n) + " comma-separated values");
  return v;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json header(const std::string& command, const RunConfig& rc) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  j["model"] = {{"B", rc.B}, {"hbar", rc.hbar}, {"m", rc.m}};
  return j;
}

/// Residual check table shared by the verifying subcommands.
struct Checks {
  ordered_json items = ordered_json::array();
  std::string first_failure;

  void add(const std::string& name, double value, double tol, bool below = true) {
    const bool ok = below ? value <= tol : value > tol;
    items.push_back({{"name", name}, {"value", value}, {"comparison", below ? "<=" : ">"}, {"threshold", tol},
                     {"passed", ok}});
    if (!ok && first_failure.empty()) first_failure = name;
  }
  Outcome finish(ordered_json j) const {
    j["passed"] = first_failure.empty();
    if (!first_failure.empty()) j["first_failure"] = first_failure;
    j["checks"] = items;
    return {dump(j), first_failure.empty() ? kExitOk : kExitNumericFailure};
  }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::string render(const std::string& format) const {
    std::ostringstream os;
    os << std::setprecision(17);
    if (format == "json") {
      ordered_json j;
      j["schema"] = 1;
      j["columns"] = columns;
      j["rows"] = rows;
      return dump(j);
    }
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
      os << "\n";
    }
    return os.str();
  }
};

StructureConstants resolve_algebra(const std::string& spec, const ModelParams& p) {
  if (std::filesystem::exists(spec)) return load_algebra_file(spec);
  try {
    return catalog::by_name(spec, p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Outcome cmd_algebra_check(const RunConfig& rc, const std::string& algebra) {
  const auto sc = resolve_algebra(algebra, rc.model());
  ordered_json j = header("algebra-check", rc);
  j["algebra"] = sc.name();
  j["dim"] = sc.dim();
  j["basis_names"] = sc.basis_names();
  j["rational"] = sc.is_rational();
  j["abelianization_dim"] = sc.abelianization_dim();
  j["betti"] = betti_numbers(sc);
  Checks c;
  c.add("antisymmetry_defect", sc.antisymmetry_defect(), 1e-12);
  c.add("jacobi_defect", sc.jacobi_defect(), 1e-12);
  if (sc.is_rational()) {
    bool dd = true;
    for (int k = 0; k + 1 < sc.dim(); ++k) dd = dd && exact_dd_vanishes(k, sc);
    c.add("dd_exact_defect", dd ? 0.0 : 1.0, 0.0);
  }
  return c.finish(std::move(j));
}

Outcome cmd_cohomology(const RunConfig& rc, const std::string& algebra, int degree) {
  const auto sc = resolve_algebra(algebra, rc.model());
  ordered_json j = header("cohomology", rc);
  j["algebra"] = sc.name();
  if (degree >= 0) {
    if (degree > sc.dim()) throw UsageError("--degree exceeds the algebra dimension");
    j["degree"] = degree;
    j["dim"] = cohomology_dim(degree, sc);
  } else {
    j["betti"] = betti_numbers(sc);
  }
  return {dump(j), kExitOk};
}

Outcome cmd_orbit_classify(const RunConfig& rc, const std::string& zeta_text) {
  const auto z = parse_list(zeta_text, 4, "--zeta");
  const auto p = rc.model();
  const CoadjointPoint zeta(z[0], z[1], z[2], z[3]);
  const OrbitClass oc = classify(zeta, p);
  ordered_json j;
  j["tag"] = orbit_case_name(oc.tag);
  j["schema"] = 1;
  j["zeta"] = z;
  switch (oc.tag) {
    case OrbitCase::A: j["casimir"] = oc.casimir; j["z3"] = oc.z3; break;
    case OrbitCase::B: j["z2"] = oc.z2; break;
    case OrbitCase::C: j["z0"] = oc.z0; j["z1"] = oc.z1; j["family"] = oc.family; break;
  }
  j["orbit_dim"] = orbit_dimension(zeta, p);
  const Subalgebra stab = stability_subalgebra(zeta, p);
  j["stabilizer_dim"] = stab.dim();
  return {dump(j), kExitOk};
}

Outcome cmd_orbit_act(const RunConfig& rc, const std::string& zeta_text, const std::string& g_text) {
  const auto z = parse_list(zeta_text, 4, "--zeta");
  const auto gv = parse_list(g_text, 4, "--g");
  const auto p = rc.model();
  const CoadjointPoint zeta(z[0], z[1], z[2], z[3]);
  const GroupElement g{gv[0], gv[1], gv[2], gv[3]};
  const CoadjointPoint u = coadjoint_action(g, zeta, p);
  ordered_json j = header("orbit act", rc);
  j["zeta"] = z;
  j["g"] = gv;
  j["u"] = {u[0], u[1], u[2], u[3]};
  Checks c;
  const double c0 = casimir_pairing(zeta, p);
  c.add("casimir_relative_change", std::abs(casimir_pairing(u, p) - c0) / (1.0 + std::abs(c0)), 1e-12);
  c.add("u3_change", std::abs(u[3] - zeta[3]), 0.0);
  return c.finish(std::move(j));
}

struct RepOptions {
  std::string family = "A";
  double c2 = std::nan("");
  double z3 = std::nan("");
  double z2 = 5.0;
  double z0 = 0.7;
  double z1 = 0.3;
};

RepParams make_rep(const RunConfig& rc, const RepOptions& o) {
  const auto p = rc.model();
  if (o.family == "A") {
    const RepParams q = quantum_rep(p, rc.m);
    return RepParams::case_a(std::isnan(o.c2) ? q.c2 : o.c2, std::isnan(o.z3) ? q.z3 : o.z3, p);
  }
  if (o.family == "B") return RepParams::case_b(o.z2, p);
  if (o.family == "C") return RepParams::case_c(o.z0, o.z1, p);
  throw UsageError("--case must be A, B or C");
}

Outcome cmd_rep_verify(const RunConfig& rc, const RepOptions& o, int trials, double tol) {
  const RepParams rep = make_rep(rc, o);
  const auto probes = carrier_probes(rep);
  std::mt19937_64 rng(rc.seed);
  double hom = 0.0, uni = 0.0;
  for (int i = 0; i < trials; ++i) {
    const GroupElement g1 = random_group_element(rng, 1.0), g2 = random_group_element(rng, 1.0);
    hom = std::max(hom, verify_homomorphism(rep, g2, g1, probes));
    uni = std::max(uni, verify_unitarity(rep, random_group_element(rng, 1.0), probes));
  }
  const auto comm = verify_commutators(rep, probes);
  ordered_json j = header("rep verify", rc);
  j["case"] = o.family;
  j["trials"] = trials;
  Checks c;
  c.add("homomorphism", hom, tol);
  c.add("unitarity", uni, tol);
  c.add("commutators", comm.commutator, tol * 0.1);
  c.add("anti_hermiticity", comm.anti_hermiticity, tol * 0.1);
  c.add("casimir", verify_casimir(rep, probes), tol * 0.1);
  return c.finish(std::move(j));
}

Outcome cmd_rep_apply(const RunConfig& rc, const RepOptions& o, const std::string& g_text, int probe, double x_min,
                      double x_max, int n) {
  const auto gv = parse_list(g_text, 4, "--g");
  const RepParams rep = make_rep(rc, o);
  const auto probes = carrier_probes(rep);
  if (probe < 0 || probe >= static_cast<int>(probes.size()))
    throw UsageError("--probe must be in 0.." + std::to_string(probes.size() - 1));
  if (n < 2 || !(x_max > x_min)) throw UsageError("need --n >= 2 and --x-max > --x-min");
  const WaveFunction f = rep_apply(rep, GroupElement{gv[0], gv[1], gv[2], gv[3]}, probes[probe]);
  Table t{{"x", "re", "im", "abs"}, {}};
  for (int i = 0; i < n; ++i) {
    const double x = x_min + (x_max - x_min) * i / (n - 1);
    const cplx v = f.is_amplitude() ? f.amplitude_value() : f(x);
    t.rows.push_back({x, v.real(), v.imag(), std::abs(v)});
  }
  return {t.render(rc.format.empty() ? "csv" : rc.format), kExitOk};
}

Outcome cmd_quantize_check(const RunConfig& rc, int trials, double tol) {
  const auto p = rc.model();
  const auto probes = hermite_probes();
  std::mt19937_64 rng(rc.seed);
  using P = PolynomialObservable;
  const auto u = comoment_polynomials(p, rc.m);
  const std::vector<P> fs = {P::constant(1.0), P::q(), P::p(), P::q() * P::q(), P::q() * P::p(), P::p() * P::p(), u[2]};
  double cov = 0.0;
  for (int i = 0; i < trials; ++i)
    cov = std::max(cov, verify_covariance(random_group_element(rng, 1.0), fs[i % fs.size()], p, rc.m, probes));
  bool rejected = false;
  try {
    (void)quantize(P::q() * P::q() * P::p(), p);
  } catch (const QuantizationObstruction&) {
    rejected = true;
  }
  ordered_json j = header("quantize check", rc);
  j["trials"] = trials;
  Checks c;
  c.add("dirac", verify_dirac(p, rc.m, probes), tol * 0.1);
  c.add("dirac_wrong_sign", verify_dirac(p, rc.m, probes, 1.0 / p.hbar()), 0.1, false);
  c.add("covariance", cov, tol);
  c.add("degree3_accepted", rejected ? 0.0 : 1.0, 0.0);
  return c.finish(std::move(j));
}

Outcome cmd_quantize_op(const RunConfig& rc, const std::string& poly) {
  PolynomialObservable f;
  try {
    f = PolynomialObservable::parse(poly);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  ordered_json j = header("quantize op", rc);
  j["poly"] = f.to_string();
  j["degree"] = f.degree();
  try {
    const QuantOperator op = quantize(f, rc.model());
    j["operator"] = op.describe();
    Checks c;
    c.add("hermiticity", hermiticity_residual(op, hermite_probes()), 1e-9);
    return c.finish(std::move(j));
  } catch (const QuantizationObstruction& e) {
    j["passed"] = false;
    j["first_failure"] = "quantization_obstruction";
    j["error"] = e.what();
    return {dump(j), kExitNumericFailure};
  }
}

struct DynamicsOptions {
  double q1 = 0.0;
  double ptilde = 0.3;
  double tau0 = 0.0;
  double tau = 2.0;
  double E0 = 0.5;
  double sigma = 0.4;
  int n = 400;
};

Outcome cmd_evolve(const RunConfig& rc, const DynamicsOptions& d, double tol) {
  const auto p = rc.model();
  const ClassicalState cs{d.q1, d.ptilde, d.tau0, rc.m};
  if (d.n < 2) throw UsageError("--n must be at least 2");
  const auto packet = SpectralAmplitude::gaussian(d.E0, d.sigma);
  const auto grid = packet_grid(cs, p, packet, d.tau, d.n);
  const OracleResult o = oracle_propagate(cs, p, packet, d.tau, grid);
  Table t{{"E", "re_c", "im_c", "abs_c", "re_oracle", "im_oracle", "deviation"}, {}};
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const cplx c = c_closed_form(cs, p, grid[i], d.tau, packet);
    const double dev = std::max(std::abs(c - o.c_gaussian[i]), std::abs(c - o.c_characteristics[i]));
    worst = std::max(worst, dev);
    t.rows.push_back({grid[i], c.real(), c.imag(), std::abs(c), o.c_gaussian[i].real(), o.c_gaussian[i].imag(), dev});
  }
  return {t.render(rc.format.empty() ? "csv" : rc.format), worst <= tol ? kExitOk : kExitNumericFailure};
}

Outcome cmd_trajectory(const RunConfig& rc, const DynamicsOptions& d, double from, double to, int steps) {
  const auto p = rc.model();
  const ClassicalState cs{d.q1, d.ptilde, d.tau0, rc.m};
  if (steps < 1 || !(to > from)) throw UsageError("need --steps >= 1 and --tau-to > --tau-from");
  Table t{{"tau", "q0", "q1", "ptilde", "energy", "velocity", "proper_time", "total_energy"}, {}};
  for (int i = 0; i <= steps; ++i) {
    const double tau = from + (to - from) * i / steps;
    const TrajectoryPoint x = classical_trajectory(cs, p, tau);
    t.rows.push_back({tau, x.q0, x.q1, x.ptilde, relativistic_energy(cs, p, tau), velocity(cs, p, tau),
                      proper_time(cs, p, tau), expectation_total_energy(cs, p, d.E0, tau)});
  }
  return {t.render(rc.format.empty() ? "csv" : rc.format), kExitOk};
}

Outcome cmd_all_checks(const RunConfig& rc, int threads, const std::vector<int>& criteria) {
  SuiteConfig cfg{rc.model(), rc.m, rc.seed, threads};
  std::vector<SuiteReport> reports;
  if (criteria.empty()) {
    reports = run_all(cfg);
  } else {
    for (int c : criteria) {
      if (c < 1 || c > 10) throw UsageError("--criterion must be in 1..10");
      reports.push_back(run_suite(c, cfg));
    }
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });
  return {reports_to_json(reports, cfg), ok ? kExitOk : kExitNumericFailure};
}

constexpr const char* kCsvHelp =
    "CSV columns (stable):\n"
    "  rep apply   x,re,im,abs\n"
    "  evolve      E,re_c,im_c,abs_c,re_oracle,im_oracle,deviation\n"
    "  trajectory  tau,q0,q1,ptilde,energy,velocity,proper_time,total_energy\n"
    "JSON reports carry \"schema\": 1.\n"
    "Exit codes: 0 ok, 1 numeric failure (report names the residual), 2 usage error.";

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended Poincare group in 1+1 dimensions: verification suites and simulations", "pext"};
  app.footer(kCsvHelp);
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig rc;
  app.add_option("--B", rc.B, "central charge (nonzero)")->capture_default_str();
  app.add_option("--hbar", rc.hbar, "Planck constant (positive)")->capture_default_str();
  app.add_option("--m", rc.m, "mass (positive)")->capture_default_str();
  app.add_option("--seed", rc.seed, "random seed")->capture_default_str();
  app.add_option("--format", rc.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", rc.output, "output path (default: standard output)");

  std::string algebra = "i12";
  int degree = -1;
  auto* algebra_check = app.add_subcommand("algebra-check", "validate an algebra (name or JSON file)");
  algebra_check->add_option("--algebra", algebra, "i12, p11, so21, wh, abelian<n> or a JSON path")->capture_default_str();
  auto* cohomology = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology dimensions");
  cohomology->add_option("--algebra", algebra, "i12, p11, so21, wh, abelian<n> or a JSON path")->capture_default_str();
  cohomology->add_option("--degree", degree, "degree k (omit for all Betti numbers)")->check(CLI::NonNegativeNumber);

  std::string zeta = "0,0,0.5,-1", g = "0,0,0,0";
  auto* orbit = app.add_subcommand("orbit", "coadjoint orbits");
  orbit->require_subcommand(1, 1);
  auto* orbit_classify = orbit->add_subcommand("classify", "orbit labels of a dual point");
  orbit_classify->add_option("--zeta", zeta, "u0,u1,u2,u3")->capture_default_str();
  auto* orbit_act = orbit->add_subcommand("act", "coadjoint action of g on zeta");
  orbit_act->add_option("--zeta", zeta, "u0,u1,u2,u3")->capture_default_str();
  orbit_act->add_option("--g", g, "theta0,theta1,alpha,beta")->capture_default_str();

  RepOptions ro;
  int trials = 20, probe = 0, n_points = 201;
  double tol = 1e-8, x_min = -6.0, x_max = 6.0;
  auto add_rep_options = [&](CLI::App* sub) {
    sub->add_option("--case", ro.family, "A, B or C")->check(CLI::IsMember({"A", "B", "C"}))->capture_default_str();
    sub->add_option("--c2", ro.c2, "case A Casimir label (default m^2/hbar^2)");
    sub->add_option("--z3", ro.z3, "case A central label (default -1/hbar)");
    sub->add_option("--z2", ro.z2, "case B label")->capture_default_str();
    sub->add_option("--z0", ro.z0, "case C label")->capture_default_str();
    sub->add_option("--z1", ro.z1, "case C label")->capture_default_str();
  };
  auto* rep = app.add_subcommand("rep", "unitary irreducible representations");
  rep->require_subcommand(1, 1);
  auto* rep_verify = rep->add_subcommand("verify", "homomorphism, unitarity, commutator and Casimir residuals");
  add_rep_options(rep_verify);
  rep_verify->add_option("--trials", trials, "random pairs")->check(CLI::PositiveNumber)->capture_default_str();
  rep_verify->add_option("--tol", tol, "residual tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  auto* rep_apply_cmd = rep->add_subcommand("apply", "sample T(g) applied to a probe function (CSV)");
  add_rep_options(rep_apply_cmd);
  rep_apply_cmd->add_option("--g", g, "theta0,theta1,alpha,beta")->capture_default_str();
  rep_apply_cmd->add_option("--probe", probe, "probe index 0..5")->capture_default_str();
  rep_apply_cmd->add_option("--x-min", x_min)->capture_default_str();
  rep_apply_cmd->add_option("--x-max", x_max)->capture_default_str();
  rep_apply_cmd->add_option("--n", n_points, "sample count")->capture_default_str();

  std::string poly;
  auto* quantize_cmd = app.add_subcommand("quantize", "quantization of polynomial observables");
  quantize_cmd->require_subcommand(1, 1);
  auto* quantize_check = quantize_cmd->add_subcommand("check", "Dirac condition, covariance, degree gate");
  int q_trials = 50;
  quantize_check->add_option("--trials", q_trials, "covariance pairs")->check(CLI::PositiveNumber)->capture_default_str();
  quantize_check->add_option("--tol", tol, "covariance tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  auto* quantize_op = quantize_cmd->add_subcommand("op", "operator of a polynomial in q, p");
  quantize_op->add_option("--poly", poly, "e.g. \"q^2 - 0.5qp + 1\"")->required();

  DynamicsOptions d;
  double tau_from = -3.0, tau_to = 3.0, ev_tol = 1e-6;
  int steps = 60;
  auto add_dynamics_options = [&](CLI::App* sub) {
    sub->add_option("--q1", d.q1, "q^1 at tau0")->capture_default_str();
    sub->add_option("--ptilde", d.ptilde, "kinematical momentum at tau0")->capture_default_str();
    sub->add_option("--tau0", d.tau0)->capture_default_str();
    sub->add_option("--E0", d.E0, "packet centre energy")->capture_default_str();
  };
  auto* evolve = app.add_subcommand("evolve", "spectral coefficients c_E(tau) against both oracles (CSV)");
  add_dynamics_options(evolve);
  evolve->add_option("--tau", d.tau)->capture_default_str();
  evolve->add_option("--sigma", d.sigma, "packet width")->check(CLI::PositiveNumber)->capture_default_str();
  evolve->add_option("--n", d.n, "grid points")->capture_default_str();
  evolve->add_option("--tol", ev_tol, "max deviation")->check(CLI::PositiveNumber)->capture_default_str();
  auto* trajectory = app.add_subcommand("trajectory", "classical trajectory and total energy (CSV)");
  add_dynamics_options(trajectory);
  trajectory->add_option("--tau-from", tau_from)->capture_default_str();
  trajectory->add_option("--tau-to", tau_to)->capture_default_str();
  trajectory->add_option("--steps", steps)->capture_default_str();

  int threads = 0;
  std::vector<int> criteria;
  auto* all_checks = app.add_subcommand("all-checks", "run every acceptance suite and emit a JSON report");
  all_checks->add_option("--threads", threads, "workers (default POINCARE_EXT_THREADS or hardware)")
      ->check(CLI::NonNegativeNumber);
  all_checks->add_option("--criterion", criteria, "run only these criteria (repeatable)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'pext --help' for usage\n";
    return kExitUsage;
  }

  Outcome result;
  try {
    (void)rc.model();
    if (!(rc.m > 0.0)) throw UsageError("--m must be positive");
    if (*algebra_check) result = cmd_algebra_check(rc, algebra);
    else if (*cohomology) result = cmd_cohomology(rc, algebra, degree);
    else if (*orbit_classify) result = cmd_orbit_classify(rc, zeta);
    else if (*orbit_act) result = cmd_orbit_act(rc, zeta, g);
    else if (*rep_verify) result = cmd_rep_verify(rc, ro, trials, tol);
    else if (*rep_apply_cmd) result = cmd_rep_apply(rc, ro, g, probe, x_min, x_max, n_points);
    else if (*quantize_check) result = cmd_quantize_check(rc, q_trials, tol);
    else if (*quantize_op) result = cmd_quantize_op(rc, poly);
    else if (*evolve) result = cmd_evolve(rc, d, ev_tol);
    else if (*trajectory) result = cmd_trajectory(rc, d, tau_from, tau_to, steps);
    else if (*all_checks) result = cmd_all_checks(rc, threads, criteria);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    ordered_json j;
    j["schema"] = 1;
    j["passed"] = false;
    j["first_failure"] = "exception";
    j["error"] = e.what();
    result = {dump(j), kExitNumericFailure};
  }

  if (rc.output.empty()) {
    out << result.text;
  } else {
    std::ofstream file(rc.output, std::ios::binary);
    if (!file) {
      err << "cannot write " << rc.output << "\n";
      return kExitUsage;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace pext::cli
