#include "pext/suites.hpp"

#include "pext/cohomology.hpp"
#include "pext/conventions.hpp"
#include "pext/dynamics.hpp"
#include "pext/group.hpp"
#include "pext/irreps.hpp"
#include "pext/orbits.hpp"
#include "pext/polynomial.hpp"
#include "pext/quadrature.hpp"
#include "pext/quantization.hpp"
#include "pext/wavefunction.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <random>
#include <thread>

namespace pext {

const char* comparison_symbol(Comparison c) {
  switch (c) {
    case Comparison::LessEqual: return "<=";
    case Comparison::Greater: return ">";
    case Comparison::GreaterEqual: return ">=";
    case Comparison::Equal: return "==";
  }
  return "?";
}

CheckResult make_check(std::string name, double value, Comparison cmp, double threshold) {
  CheckResult r{std::move(name), value, threshold, cmp, false};
  switch (cmp) {
    case Comparison::LessEqual: r.passed = value <= threshold; break;
    case Comparison::Greater: r.passed = value > threshold; break;
    case Comparison::GreaterEqual: r.passed = value >= threshold; break;
    case Comparison::Equal: r.passed = value == threshold; break;
  }
  return r;
}

bool SuiteReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

double SuiteReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks)
    if (c.comparison == Comparison::LessEqual) m = std::max(m, c.value);
  return m;
}

const CheckResult* SuiteReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

namespace {

constexpr auto LE = Comparison::LessEqual;
constexpr auto GT = Comparison::Greater;
constexpr auto GE = Comparison::GreaterEqual;
constexpr auto EQ = Comparison::Equal;

std::mt19937_64 suite_rng(const SuiteConfig& cfg, int criterion) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(criterion)};
  return std::mt19937_64(seq);
}

std::uint64_t suite_seed(const SuiteConfig& cfg, int criterion) { return suite_rng(cfg, criterion)(); }

void add(SuiteReport& r, std::string name, double value, Comparison cmp, double threshold) {
  r.checks.push_back(make_check(std::move(name), value, cmp, threshold));
}

double flag(bool b) { return b ? 1.0 : 0.0; }

}  // namespace

SuiteReport suite_cohomology(const SuiteConfig& cfg) {
  SuiteReport r{1, "cohomology", {}};
  const auto i12 = catalog::extended_poincare(cfg.model);
  const auto p11 = catalog::poincare_11();
  const auto bi = betti_numbers(i12);
  const auto bp = betti_numbers(p11);
  add(r, "i12.H0", bi[0], EQ, 1);
  add(r, "i12.H1", bi[1], EQ, 1);
  add(r, "i12.H2", bi[2], EQ, 0);
  add(r, "p11.H2", bp[2], EQ, 1);
  for (const auto* sc : {&i12, &p11}) {
    bool dd = true;
    for (int k = 0; k + 1 < sc->dim(); ++k) dd = dd && exact_dd_vanishes(k, *sc);
    add(r, sc->name() + ".dd_exact", flag(dd), EQ, 1);
    const auto& b = sc == &i12 ? bi : bp;
    double chi = 0.0;
    for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 == 0 ? 1.0 : -1.0) * b[k];
    add(r, sc->name() + ".euler_characteristic", chi, EQ, 0);
    add(r, sc->name() + ".jacobi_defect", sc->jacobi_defect(), LE, 0.0);
  }
  return r;
}

SuiteReport suite_structure(const SuiteConfig& cfg) {
  SuiteReport r{2, "structure", {}};
  const auto s = structural_report(cfg.model, 1000, suite_seed(cfg, 2));
  add(r, "central_series.stable_dim", s.central_series.back(), EQ, 3);
  add(r, "derived_series.final_dim", s.derived_series.back(), EQ, 0);
  add(r, "ad.max_imag_eigenvalue", s.max_imag_eigenvalue, LE, 1e-10);
  add(r, "ad.max_abs_trace", s.max_abs_trace, LE, 1e-12);
  add(r, "ad.nonzero_real_eigenvalue", flag(s.has_nonzero_real_eigenvalue), EQ, 1);
  add(r, "samples", s.samples, EQ, 1000);
  add(r, "conventions.self_test", flag(conv::self_test()), EQ, 1);
  return r;
}

SuiteReport suite_coadjoint(const SuiteConfig& cfg) {
  SuiteReport r{3, "coadjoint_invariance", {}};
  const auto& p = cfg.model;
  auto rng = suite_rng(cfg, 3);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  double casimir = 0.0, u3 = 0.0;
  int orbit_failures = 0, class_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    CoadjointPoint zeta(U(rng), U(rng), U(rng), U(rng));
    if (i % 10 == 0) zeta = CoadjointPoint(U(rng), U(rng), 0.0, 0.0);
    const GroupElement g = random_group_element(rng, 2.0);
    const CoadjointPoint u = coadjoint_action(g, zeta, p);
    const double c0 = casimir_pairing(zeta, p), c1 = casimir_pairing(u, p);
    casimir = std::max(casimir, std::abs(c1 - c0) / (1.0 + std::abs(c0)));
    u3 = std::max(u3, std::abs(u[kI] - zeta[kI]));
    if (!on_orbit(u, zeta, p)) ++orbit_failures;
    const OrbitClass a = classify(zeta, p), b = classify(u, p);
    if (a.tag != b.tag || (a.tag == OrbitCase::C && a.family != b.family)) ++class_failures;
  }
  add(r, "casimir.max_relative_error", casimir, LE, 1e-12);
  add(r, "u3.max_abs_change", u3, LE, 0.0);
  add(r, "on_orbit.failures", orbit_failures, EQ, 0);
  add(r, "classify.failures", class_failures, EQ, 0);
  return r;
}

SuiteReport suite_pukanszky(const SuiteConfig& cfg) {
  SuiteReport r{4, "pukanszky", {}};
  const auto& p = cfg.model;
  const std::uint64_t seed = suite_seed(cfg, 4);
  auto run = [&](const std::string& label, const Subalgebra& h, const CoadjointPoint& zeta, int orbit_dim) {
    const auto rep = pukanszky_check(h, zeta, p, 100, seed);
    add(r, label + ".subordinate", flag(rep.subordinate), EQ, 1);
    add(r, label + ".maximal", flag(rep.maximal), EQ, 1);
    add(r, label + ".pukanszky_failures", rep.failures, EQ, 0);
    add(r, label + ".samples", rep.samples, EQ, 100);
    add(r, label + ".closure_defect", h.closure_defect(p), LE, 1e-12);
    add(r, label + ".orbit_dim", orbit_dimension(zeta, p), EQ, orbit_dim);
  };
  const double hbar = p.hbar();
  run("caseA.m1", Subalgebra::case_a(), quantum_rep(p, cfg.mass).base_point(), 2);
  run("caseA.general", Subalgebra::case_a(), RepParams::case_a(-0.7, 1.6, p).base_point(), 2);
  run("caseA.hbar", Subalgebra::case_a(), RepParams::case_a(2.5, -1.0 / hbar, p).base_point(), 2);
  run("caseB", Subalgebra::full(), CoadjointPoint(0.0, 0.0, 5.0, 0.0), 0);
  const double z[8][2] = {{0.7, 0.3}, {-0.7, -0.3}, {0.3, -0.7}, {-0.3, 0.7},
                          {-0.5, 0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, -0.5}};
  for (int i = 0; i < 8; ++i) {
    const CoadjointPoint zeta(z[i][0], z[i][1], 0.0, 0.0);
    const OrbitClass oc = classify(zeta, p);
    run("caseC.family" + std::to_string(oc.family), Subalgebra::wh(), zeta, 2);
  }
  return r;
}

SuiteReport suite_representations(const SuiteConfig& cfg) {
  SuiteReport r{5, "representations", {}};
  const auto& p = cfg.model;
  const auto probes = hermite_probes();
  const std::uint64_t seed = suite_seed(cfg, 5);
  auto rng = suite_rng(cfg, 5);

  struct Family {
    std::string label;
    RepParams rep;
    int pairs;
  };
  const std::vector<Family> families = {
      {"caseA", quantum_rep(p, cfg.mass), 200},
      {"caseB", RepParams::case_b(5.0, p), 200},
      {"caseC", RepParams::case_c(0.7, 0.3, p), 200},
  };
  for (const auto& fam : families) {
    const auto probes = carrier_probes(fam.rep);
    double hom = 0.0, uni = 0.0;
    for (int i = 0; i < fam.pairs; ++i) {
      const GroupElement g1 = random_group_element(rng, 1.0), g2 = random_group_element(rng, 1.0);
      hom = std::max(hom, verify_homomorphism(fam.rep, g2, g1, probes));
      uni = std::max(uni, verify_unitarity(fam.rep, random_group_element(rng, 1.0), probes));
    }
    add(r, fam.label + ".homomorphism", hom, LE, 1e-8);
    add(r, fam.label + ".unitarity", uni, LE, 1e-8);
    const auto comm = verify_commutators(fam.rep, probes);
    add(r, fam.label + ".commutators", comm.commutator, LE, 1e-9);
    add(r, fam.label + ".anti_hermiticity", comm.anti_hermiticity, LE, 1e-9);
    add(r, fam.label + ".casimir", verify_casimir(fam.rep, probes), LE, 1e-9);
  }
  const auto& repA = families[0].rep;
  const auto& repC = families[2].rep;
  add(r, "caseA.faithfulness_margin", faithfulness_margin(repA, probes), GT, 1e-3);
  add(r, "caseC.faithfulness_margin", faithfulness_margin(repC, probes), LE, 1e-12);
  add(r, "caseA.induced_condition", verify_induced_condition(repA, probes[0], 50, seed), LE, 1e-9);
  add(r, "caseA.realization", verify_realization(repA, probes[5], 50, seed), LE, 1e-9);
  add(r, "caseC.induced_condition", verify_induced_condition(repC, probes[0], 50, seed), LE, 1e-9);
  add(r, "caseC.realization", verify_realization(repC, probes[5], 50, seed), LE, 1e-9);
  return r;
}

SuiteReport suite_generators(const SuiteConfig& cfg) {
  SuiteReport r{6, "generator_differences", {}};
  const auto& p = cfg.model;
  const auto probes = hermite_probes();
  const std::vector<double> steps = {1e-2, 5e-3, 2.5e-3};
  // Residuals at this level are rounding noise and count as exact.
  constexpr double kExact = 1e-12;
  const std::vector<std::pair<std::string, RepParams>> reps = {{"caseA", quantum_rep(p, cfg.mass)},
                                                                {"caseC", RepParams::case_c(0.7, 0.3, p)}};
  for (const auto& [label, rep] : reps) {
    double worst_order = 4.0;
    for (int b = 0; b < kDim; ++b)
      for (int k : {0, 5}) {
        const auto e = generator_difference_errors(rep, AlgebraElement::basis(b), probes[k], steps);
        for (std::size_t i = 0; i + 1 < e.size(); ++i) {
          if (e[i] <= kExact && e[i + 1] <= kExact) continue;
          worst_order = std::min(worst_order, std::log2(e[i] / e[i + 1]));
        }
      }
    add(r, label + ".min_convergence_order", worst_order, GE, 1.8);
  }
  return r;
}

SuiteReport suite_quantization(const SuiteConfig& cfg) {
  SuiteReport r{7, "quantization", {}};
  const auto& p = cfg.model;
  const auto probes = hermite_probes();
  auto rng = suite_rng(cfg, 7);
  using P = PolynomialObservable;
  add(r, "dirac.residual", verify_dirac(p, cfg.mass, probes), LE, 1e-9);
  add(r, "dirac.wrong_sign_residual", verify_dirac(p, cfg.mass, probes, 1.0 / p.hbar()), GT, 0.1);

  const auto u = comoment_polynomials(p, cfg.mass);
  const std::vector<P> observables = {P::constant(1.0), P::q(), P::p(), P::q() * P::q(),
                                      P::q() * P::p(), P::p() * P::p(), u[kJ]};
  double cov = 0.0;
  for (int i = 0; i < 50; ++i) {
    const GroupElement g = random_group_element(rng, 1.0);
    cov = std::max(cov, verify_covariance(g, observables[i % observables.size()], p, cfg.mass, probes));
  }
  add(r, "covariance.residual", cov, LE, 1e-8);

  double herm = 0.0;
  for (const auto& f : observables) herm = std::max(herm, hermiticity_residual(quantize(f, p), probes));
  add(r, "hermiticity.residual", herm, LE, 1e-9);

  auto rejected = [&](const P& f) {
    try {
      (void)quantize(f, p);
    } catch (const QuantizationObstruction&) {
      return true;
    }
    return false;
  };
  add(r, "degree3.q2p_rejected", flag(rejected(P::q() * P::q() * P::p())), EQ, 1);
  add(r, "degree3.p3_rejected", flag(rejected(P::p() * P::p() * P::p())), EQ, 1);
  add(r, "degree2.u2_accepted", flag(!rejected(u[kJ])), EQ, 1);
  return r;
}

SuiteReport suite_classical(const SuiteConfig& cfg) {
  SuiteReport r{8, "classical", {}};
  const auto& p = cfg.model;
  auto rng = suite_rng(cfg, 8);
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  const double target = cfg.mass * cfg.mass / conv::kSqrtMinusH;
  double casimir = 0.0, pullback = 0.0;
  for (int i = 0; i < 100; ++i) {
    const PhasePoint s{U(rng), U(rng)};
    casimir = std::max(casimir, std::abs(casimir_pairing(comoments(s, p, cfg.mass), p) - target) / (1.0 + target));
    if (i % 10 == 0) pullback = std::max(pullback, pullback_residual(s, p, cfg.mass));
  }
  add(r, "comoment_casimir.max_relative_error", casimir, LE, 1e-12);
  add(r, "pullback.residual", pullback, LE, 1e-6);

  const auto qa = spacetime_polynomials(p);
  double spacetime = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      spacetime = std::max(
          spacetime, poisson_bracket(qa[a], qa[b]).distance(PolynomialObservable::constant(conv::eps_upper(a, b) / p.B())));
  add(r, "spacetime_bracket.exact_defect", spacetime, LE, 0.0);

  const auto u = comoment_polynomials(p, cfg.mass);
  double hom = 0.0;
  for (int A = 0; A < kDim; ++A)
    for (int B = 0; B < kDim; ++B) {
      const AlgebraElement c = bracket(AlgebraElement::basis(A), AlgebraElement::basis(B), p);
      PolynomialObservable rhs;
      for (int C = 0; C < kDim; ++C) rhs = rhs + u[C] * c[C];
      hom = std::max(hom, poisson_bracket(u[A], u[B]).distance(rhs));
    }
  add(r, "comoment_homomorphism.defect", hom, LE, 1e-14);
  return r;
}

namespace {

struct DynamicsCase {
  ModelParams model;
  ClassicalState cs;
  double tau;
  double E0;
  double sigma;
};

std::vector<DynamicsCase> dynamics_cases(const SuiteConfig& cfg) {
  return {
      {cfg.model, {0.0, 0.3, 0.0, cfg.mass}, 2.0, 0.5, 0.4},
      {ModelParams(-1.0, 1.0), {0.2, -0.8, 0.5, 0.5}, 3.0, -0.3, 0.6},
      {ModelParams(2.0, 0.7), {-0.4, 1.5, -1.0, 2.0}, 1.5, 1.0, 0.3},
      {ModelParams(-2.0, 1.3), {0.0, 0.0, 0.0, 1.0}, -1.5, 0.2, 0.5},
      {ModelParams(1.0, 0.5), {1.0, -2.0, 0.0, 2.0}, 4.0, 0.0, 1.0},
  };
}

}  // namespace

SuiteReport suite_dynamics(const SuiteConfig& cfg) {
  SuiteReport r{9, "dynamics", {}};
  double c_dev = 0.0, norm_dev = 0.0, state_norm_dev = 0.0, energy_dev = 0.0;
  double argmin_dev = 0.0, min_value_dev = 0.0, comm = 0.0, eig_phase = 0.0;
  int monotone_failures = 0, transition_failures = 0;
  const auto probes = hermite_probes();
  for (const auto& dc : dynamics_cases(cfg)) {
    const auto& p = dc.model;
    const auto& cs = dc.cs;
    const auto packet = SpectralAmplitude::gaussian(dc.E0, dc.sigma);
    const auto grid = packet_grid(cs, p, packet, dc.tau, 400);
    const OracleResult o = oracle_propagate(cs, p, packet, dc.tau, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const cplx c = c_closed_form(cs, p, grid[i], dc.tau, packet);
      c_dev = std::max({c_dev, std::abs(c - o.c_gaussian[i]), std::abs(c - o.c_characteristics[i])});
    }
    norm_dev = std::max(norm_dev, std::abs(closed_form_norm(cs, p, packet, dc.tau) - 1.0));
    state_norm_dev = std::max(state_norm_dev, std::abs(norm_squared(o.final_state.wavefunction()) - 1.0));
    energy_dev = std::max(energy_dev, std::abs(packet_total_energy(cs, p, o.final_state, dc.tau) -
                                               expectation_total_energy(cs, p, dc.E0, dc.tau)));

    const double star = total_energy_argmin(cs, p);
    constexpr int kGrid = 2001;
    const double lo = star - 5.0, step = 10.0 / (kGrid - 1);
    std::vector<double> values(kGrid);
    for (int i = 0; i < kGrid; ++i) values[i] = expectation_total_energy(cs, p, dc.E0, lo + step * i);
    const auto it = std::min_element(values.begin(), values.end());
    const double found = lo + step * static_cast<double>(it - values.begin());
    argmin_dev = std::max(argmin_dev, std::abs(found - star) / step);
    min_value_dev = std::max(min_value_dev, std::abs(expectation_total_energy(cs, p, dc.E0, star) -
                                                     total_energy_minimum(cs, p, dc.E0)));
    for (int i = 1; i < kGrid; ++i) {
      const double t0 = lo + step * (i - 1), t1 = lo + step * i;
      const double slack = 1e-14 * (1.0 + std::abs(values[i]));
      if (t1 <= star && values[i] > values[i - 1] + slack) ++monotone_failures;
      if (t0 >= star && values[i] < values[i - 1] - slack) ++monotone_failures;
    }
    const QuantOperator h0 = quantize(h0_polynomial(p), p);
    comm = std::max(comm, commutator_residual(total_energy_operator(cs, p, dc.tau), h0, probes));

    const auto ev = evolve_eigenstate(cs, p, dc.E0, dc.tau);
    eig_phase = std::max(eig_phase, std::abs(std::abs(ev.phase) - 1.0));
    if (transition_probability(cs, p, ev.E_final, dc.E0, dc.tau) != 1 ||
        transition_probability(cs, p, ev.E_final + 0.1, dc.E0, dc.tau) != 0)
      ++transition_failures;
  }
  add(r, "c_closed_form_vs_oracles", c_dev, LE, 1e-6);
  add(r, "norm_conservation.spectral", norm_dev, LE, 1e-8);
  add(r, "norm_conservation.state", state_norm_dev, LE, 1e-8);
  add(r, "total_energy_expectation", energy_dev, LE, 1e-6);
  add(r, "argmin.grid_steps", argmin_dev, LE, 1.0);
  add(r, "minimum_value", min_value_dev, LE, 1e-10);
  add(r, "monotonicity.failures", monotone_failures, EQ, 0);
  add(r, "total_energy_commutes_with_h0", comm, LE, 1e-10);
  add(r, "eigenstate.phase_modulus", eig_phase, LE, 1e-14);
  add(r, "eigenstate.transition_failures", transition_failures, EQ, 0);
  return r;
}

SuiteReport suite_determinism(const SuiteConfig& cfg) {
  SuiteReport r{10, "determinism", {}};
  SuiteConfig serial = cfg;
  serial.threads = 1;
  for (int c : {1, 2, 3, 4, 8}) {
    const std::string a = reports_to_json({run_suite(c, serial)}, serial);
    const std::string b = reports_to_json({run_suite(c, serial)}, serial);
    add(r, "rerun_identical.criterion" + std::to_string(c), flag(a == b), EQ, 1);
  }
  return r;
}

SuiteReport run_suite(int criterion, const SuiteConfig& cfg) {
  using Fn = SuiteReport (*)(const SuiteConfig&);
  static constexpr Fn kSuites[] = {suite_cohomology,      suite_structure,  suite_coadjoint, suite_pukanszky,
                                   suite_representations, suite_generators, suite_quantization,
                                   suite_classical,       suite_dynamics,   suite_determinism};
  if (criterion < 1 || criterion > 10) throw std::out_of_range("criterion must be in 1..10");
  try {
    return kSuites[criterion - 1](cfg);
  } catch (const std::exception& e) {
    SuiteReport r{criterion, "error", {}};
    r.checks.push_back(make_check(std::string("exception: ") + e.what(), 1.0, EQ, 0.0));
    return r;
  }
}

int worker_count(const SuiteConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("POINCARE_EXT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

std::vector<SuiteReport> run_all(const SuiteConfig& cfg) {
  std::vector<SuiteReport> out(10);
  // Slowest suites first so that they start immediately.
  const int order[10] = {9, 5, 7, 6, 10, 2, 4, 8, 3, 1};
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i; (i = next.fetch_add(1)) < 10;) out[order[i] - 1] = run_suite(order[i], cfg);
  };
  const int n = std::min(worker_count(cfg), 10);
  {
    std::vector<std::jthread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
  }
  return out;
}

std::string reports_to_json(const std::vector<SuiteReport>& reports, const SuiteConfig& cfg) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = 1;
  j["seed"] = cfg.seed;
  j["model"] = {{"B", cfg.model.B()}, {"hbar", cfg.model.hbar()}, {"m", cfg.mass}};
  bool all = true;
  ordered_json suites = ordered_json::array();
  for (const auto& r : reports) {
    all = all && r.passed();
    ordered_json s;
    s["criterion"] = r.criterion;
    s["name"] = r.name;
    s["passed"] = r.passed();
    s["max_residual"] = r.max_residual();
    if (const auto* f = r.first_failure()) s["first_failure"] = f->name;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name},
                        {"value", c.value},
                        {"comparison", comparison_symbol(c.comparison)},
                        {"threshold", c.threshold},
                        {"passed", c.passed}});
    s["checks"] = std::move(checks);
    suites.push_back(std::move(s));
  }
  j["passed"] = all;
  j["suites"] = std::move(suites);
  return j.dump(2) + "\n";
}

}  // namespace pext
