#include "pext/dynamics.hpp"

#include "pext/group.hpp"
#include "pext/quadrature.hpp"

#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>
#include <numbers>

namespace pext {

namespace {

constexpr cplx kImag{0.0, 1.0};
constexpr double kOdeTol = 1e-14;

using State2 = std::array<double, 2>;
using State4 = std::array<double, 4>;

template <class State>
auto make_stepper() {
  using namespace boost::numeric::odeint;
  return make_controlled(kOdeTol, kOdeTol, runge_kutta_fehlberg78<State>());
}

}  // namespace

void ClassicalState::validate() const {
  if (!std::isfinite(q1_0) || !std::isfinite(ptilde_0) || !std::isfinite(tau0) || !std::isfinite(m))
    throw std::invalid_argument("classical state has non-finite fields");
  if (!(m > 0.0)) throw std::invalid_argument("mass must be positive");
}

double ptilde_at(const ClassicalState& cs, const ModelParams& p, double tau) {
  return cs.ptilde_0 + p.B() * (tau - cs.tau0);
}

double relativistic_energy(const ClassicalState& cs, const ModelParams& p, double tau) {
  return std::hypot(cs.m, ptilde_at(cs, p, tau));
}

double velocity(const ClassicalState& cs, const ModelParams& p, double tau) {
  return ptilde_at(cs, p, tau) / relativistic_energy(cs, p, tau);
}

TrajectoryPoint classical_trajectory(const ClassicalState& cs, const ModelParams& p, double tau) {
  cs.validate();
  const double B = p.B();
  TrajectoryPoint t;
  t.q0 = tau;
  t.ptilde = ptilde_at(cs, p, tau);
  t.q1 = cs.q1_0 - std::hypot(cs.m, cs.ptilde_0) / B + std::hypot(cs.m, t.ptilde) / B;
  return t;
}

double proper_time(const ClassicalState& cs, const ModelParams& p, double tau) {
  cs.validate();
  return cs.m / p.B() * std::asinh(ptilde_at(cs, p, tau) / cs.m);
}

WaveFunction h0_eigenfunction(double E, const ModelParams& p) {
  const double hbar = p.hbar(), B = p.B();
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * hbar);
  auto eval = [E, hbar, B, norm](double x, int order) {
    const Jet X = Jet::variable(x, order);
    return exp((X * cplx(E) + X * X * cplx(0.5 * B)) * (-kImag / hbar)) * cplx(norm);
  };
  return WaveFunction(eval, DecayClass::Generic, {0.0, 1.0});
}

PolynomialObservable h0_polynomial(const ModelParams& p) {
  return PolynomialObservable::q() * -p.B() - PolynomialObservable::p();
}

PolynomialObservable potential_energy_polynomial(const ModelParams& p) {
  return spacetime_polynomials(p)[1] * (-0.5 * p.B());
}

SpectralAmplitude SpectralAmplitude::gaussian(double E0, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("packet width must be positive");
  const double n = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
  SpectralAmplitude s;
  s.c = [=](double E) { return cplx(n * std::exp(-(E - E0) * (E - E0) / (4.0 * sigma * sigma))); };
  s.E0 = E0;
  s.sigma = sigma;
  return s;
}

SpectralAmplitude SpectralAmplitude::eigenstate(double E0) {
  SpectralAmplitude s;
  s.c = [E0](double E) { return cplx(E == E0 ? 1.0 : 0.0); };
  s.delta = true;
  s.E0 = E0;
  return s;
}

double energy_shift(const ClassicalState& cs, const ModelParams& p, double tau) {
  return relativistic_energy(cs, p, tau) - relativistic_energy(cs, p, cs.tau0);
}

namespace {

/// exp(-(i/hbar)(-p~0 dE / 2B - m dt' / 2 + E(tau) dtau / 2))
cplx transport_phase(const ClassicalState& cs, const ModelParams& p, double tau) {
  const double B = p.B(), hbar = p.hbar();
  const double dE = energy_shift(cs, p, tau);
  const double dt = proper_time(cs, p, tau) - proper_time(cs, p, cs.tau0);
  const double dtau = tau - cs.tau0;
  const double en = relativistic_energy(cs, p, tau);
  return std::exp(-kImag / hbar * (-cs.ptilde_0 * dE / (2.0 * B) - cs.m * dt / 2.0 + en * dtau / 2.0));
}

}  // namespace

cplx c_closed_form(const ClassicalState& cs, const ModelParams& p, double E, double tau, const SpectralAmplitude& c0) {
  cs.validate();
  const double B = p.B(), hbar = p.hbar();
  const double dE = energy_shift(cs, p, tau);
  const double Es = E - dE;
  const cplx first = std::exp(kImag * ((Es * Es - E * E) / (2.0 * B * hbar)));
  return first * transport_phase(cs, p, tau) * c0(Es);
}

EigenstateEvolution evolve_eigenstate(const ClassicalState& cs, const ModelParams& p, double E, double tau) {
  cs.validate();
  const double B = p.B(), hbar = p.hbar();
  const double dE = energy_shift(cs, p, tau);
  const double Ef = E + dE;
  const cplx first = std::exp(kImag * ((E * E - Ef * Ef) / (2.0 * B * hbar)));
  const cplx second = std::exp(kImag * Ef * (tau - cs.tau0) / hbar);
  return {first * second * transport_phase(cs, p, tau), Ef};
}

int transition_probability(const ClassicalState& cs, const ModelParams& p, double E_prime, double E, double tau) {
  const double target = E + energy_shift(cs, p, tau);
  return std::abs(E_prime - target) <= 1e-10 * (1.0 + std::abs(E)) ? 1 : 0;
}

double expectation_total_energy(const ClassicalState& cs, const ModelParams& p, double E, double tau) {
  cs.validate();
  return relativistic_energy(cs, p, tau) / 2.0 + relativistic_energy(cs, p, cs.tau0) / 2.0 - E / 2.0;
}

double total_energy_argmin(const ClassicalState& cs, const ModelParams& p) { return cs.tau0 - cs.ptilde_0 / p.B(); }

double total_energy_minimum(const ClassicalState& cs, const ModelParams& p, double E) {
  (void)p;
  return cs.m / 2.0 + std::hypot(cs.m, cs.ptilde_0) / 2.0 - E / 2.0;
}

QuantOperator total_energy_operator(const ClassicalState& cs, const ModelParams& p, double tau) {
  return quantize(PolynomialObservable::constant(relativistic_energy(cs, p, tau)) - h0_polynomial(p) * 0.5, p);
}

QuantOperator hamiltonian_operator(const ClassicalState& cs, const ModelParams& p, double tau) {
  return quantize(h0_polynomial(p) + PolynomialObservable::p() * velocity(cs, p, tau), p);
}

double commutator_residual(const QuantOperator& a, const QuantOperator& b, const std::vector<WaveFunction>& probes) {
  double worst = 0.0;
  for (const auto& f : probes) {
    const WaveFunction r = linear_combination({1.0, -1.0}, {a.apply(b.apply(f)), b.apply(a.apply(f))});
    worst = std::max(worst, norm(r) / norm(f));
  }
  return worst;
}

GaussianState gaussian_state_of_packet(const SpectralAmplitude& packet, const ModelParams& p) {
  if (!(packet.sigma > 0.0)) throw std::invalid_argument("packet is not Gaussian");
  const double hbar = p.hbar(), B = p.B(), s = packet.sigma;
  const double n = std::pow(2.0 * std::numbers::pi * s * s, -0.25);
  GaussianState g;
  g.a = cplx(-s * s / (hbar * hbar), -B / (2.0 * hbar));
  g.b = cplx(0.0, -packet.E0 / hbar);
  g.c = std::log(n * std::sqrt(4.0 * std::numbers::pi * s * s / (2.0 * std::numbers::pi * hbar)));
  return g;
}

GaussianState evolve_gaussian(const ClassicalState& cs, const ModelParams& p, const GaussianState& g0, double tau) {
  cs.validate();
  const double B = p.B(), hbar = p.hbar();
  const cplx a = g0.a;
  // b' = -iB/hbar - 2(1 - v) a,  c' = -(1 - v) b
  auto rhs = [&](const State4& y, State4& dy, double s) {
    const double w = 1.0 - velocity(cs, p, s);
    const cplx b(y[0], y[1]);
    const cplx db = -kImag * B / hbar - 2.0 * w * a;
    const cplx dc = -w * b;
    dy = {db.real(), db.imag(), dc.real(), dc.imag()};
  };
  State4 y{g0.b.real(), g0.b.imag(), 0.0, 0.0};
  if (tau != cs.tau0) {
    const double dt0 = 1e-3 * (tau - cs.tau0);
    boost::numeric::odeint::integrate_adaptive(make_stepper<State4>(), rhs, y, cs.tau0, tau, dt0);
  }
  return {a, cplx(y[0], y[1]), g0.c + cplx(y[2], y[3])};
}

cplx spectral_coefficient(const GaussianState& g, const ModelParams& p, double E, double dtau) {
  // <E|psi> = (2 pi hbar)^(-1/2) int exp(A x^2 + Bx x + c),  A = a + iB/2hbar,  Bx = b + iE/hbar
  const double hbar = p.hbar();
  const cplx A = g.a + kImag * p.B() / (2.0 * hbar);
  const cplx Bx = g.b + kImag * E / hbar;
  const cplx integral = std::sqrt(std::numbers::pi / (-A)) * std::exp(g.c - Bx * Bx / (4.0 * A));
  return std::exp(-kImag * E * dtau / hbar) * integral / std::sqrt(2.0 * std::numbers::pi * hbar);
}

std::vector<double> packet_grid(const ClassicalState& cs, const ModelParams& p, const SpectralAmplitude& packet,
                                double tau, int n) {
  if (n < 2) throw std::invalid_argument("grid needs at least two points");
  const double center = packet.E0 + energy_shift(cs, p, tau);
  const double half = 8.0 * std::max(packet.sigma, 1e-3);
  std::vector<double> E(n);
  for (int i = 0; i < n; ++i) E[i] = center - half + 2.0 * half * i / (n - 1);
  return E;
}

OracleResult oracle_propagate(const ClassicalState& cs, const ModelParams& p, const SpectralAmplitude& packet,
                              double tau, const std::vector<double>& grid) {
  cs.validate();
  const double B = p.B(), hbar = p.hbar(), dtau = tau - cs.tau0;
  OracleResult r;
  r.E = grid;

  const GaussianState g0 = gaussian_state_of_packet(packet, p);
  r.final_state = evolve_gaussian(cs, p, g0, tau);
  for (double E : grid) r.c_gaussian.push_back(spectral_coefficient(r.final_state, p, E, dtau));

  // characteristics dE/ds = B v(s), along which d(log a)/ds = (i/hbar)(1 - v) E with a_E = c_E e^{iE dtau/hbar}
  auto rhs = [&](const State2& y, State2& dy, double s) {
    const double v = velocity(cs, p, s);
    dy = {B * v, (1.0 - v) * y[0]};
  };
  for (double Ef : grid) {
    State2 y{Ef, 0.0};
    if (dtau != 0.0) {
      r.total_steps += static_cast<long>(boost::numeric::odeint::integrate_adaptive(
          make_stepper<State2>(), rhs, y, tau, cs.tau0, -1e-3 * dtau));
    }
    const double phase_forward = -y[1];
    const cplx a = packet(y[0]) * std::exp(kImag * phase_forward / hbar);
    r.c_characteristics.push_back(a * std::exp(-kImag * Ef * dtau / hbar));
  }
  for (std::size_t i = 0; i < grid.size(); ++i)
    r.max_oracle_disagreement = std::max(r.max_oracle_disagreement, std::abs(r.c_gaussian[i] - r.c_characteristics[i]));
  if (r.max_oracle_disagreement > 1e-8)
    throw ConvergenceError("propagation oracles disagree by " + std::to_string(r.max_oracle_disagreement));
  return r;
}

double closed_form_norm(const ClassicalState& cs, const ModelParams& p, const SpectralAmplitude& packet, double tau) {
  const double center = packet.E0 + energy_shift(cs, p, tau);
  const auto q = integrate([&](double E) { return cplx(std::norm(c_closed_form(cs, p, E, tau, packet))); },
                           QuadratureHint{center, std::max(packet.sigma, 1e-3)});
  return q.value.real();
}

double packet_total_energy(const ClassicalState& cs, const ModelParams& p, const GaussianState& g, double tau) {
  const WaveFunction psi = g.wavefunction();
  const WaveFunction hpsi = total_energy_operator(cs, p, tau).apply(psi);
  return (inner_product(psi, hpsi) / inner_product(psi, psi)).real();
}

}  // namespace pext
