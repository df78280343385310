#pragma once

#include "pext/quantization.hpp"
#include "pext/types.hpp"
#include "pext/wavefunction.hpp"

#include <functional>
#include <vector>

namespace pext {

/// Initial data of the classical particle.
struct ClassicalState {
  double q1_0 = 0.0;      ///< q^1(tau0)
  double ptilde_0 = 0.0;  ///< kinematical momentum at tau0
  double tau0 = 0.0;
  double m = 1.0;

  /// Throws std::invalid_argument unless m > 0 and all fields are finite.
  void validate() const;
};

struct TrajectoryPoint {
  double q0 = 0.0;
  double q1 = 0.0;
  double ptilde = 0.0;
};

/// p~(tau) = p~(tau0) + B (tau - tau0)
double ptilde_at(const ClassicalState& cs, const ModelParams& p, double tau);
/// E(tau) = sqrt(m^2 + p~(tau)^2)
double relativistic_energy(const ClassicalState& cs, const ModelParams& p, double tau);
/// v(tau) = p~ / sqrt(m^2 + p~^2)
double velocity(const ClassicalState& cs, const ModelParams& p, double tau);

TrajectoryPoint classical_trajectory(const ClassicalState& cs, const ModelParams& p, double tau);

/// t' = (m / B) arsinh(p~(tau) / m)
double proper_time(const ClassicalState& cs, const ModelParams& p, double tau);

/// <x|E> = exp(-(i/hbar)(E x + (B/2) x^2)) / sqrt(2 pi hbar)
WaveFunction h0_eigenfunction(double E, const ModelParams& p);

/// H0 = -B q - p = u_0 as a polynomial, and the potential energy -B q^1 / 2.
PolynomialObservable h0_polynomial(const ModelParams& p);
PolynomialObservable potential_energy_polynomial(const ModelParams& p);

/// E |-> c_E, or a delta at E0 for eigenstate preparation.
struct SpectralAmplitude {
  std::function<cplx(double)> c;
  bool delta = false;
  double E0 = 0.0;
  double sigma = 0.0;  ///< width of Gaussian packets (0 if not Gaussian)

  cplx operator()(double E) const { return c(E); }

  /// (2 pi sigma^2)^(-1/4) exp(-(E - E0)^2 / (4 sigma^2)), unit norm.
  static SpectralAmplitude gaussian(double E0, double sigma);
  static SpectralAmplitude eigenstate(double E0);
};

/// Delta E = E(tau) - E(tau0)
double energy_shift(const ClassicalState& cs, const ModelParams& p, double tau);

/// c_E(tau) from the closed-form transport-with-phase solution.
cplx c_closed_form(const ClassicalState& cs, const ModelParams& p, double E, double tau, const SpectralAmplitude& c0);

struct EigenstateEvolution {
  cplx phase;
  double E_final;
};

/// |E> at tau0 evolves to phase * |E + Delta E> at tau.
EigenstateEvolution evolve_eigenstate(const ClassicalState& cs, const ModelParams& p, double E, double tau);

/// 1 if E' = E + Delta E within 1e-10 (1 + |E|), else 0.
int transition_probability(const ClassicalState& cs, const ModelParams& p, double E_prime, double E, double tau);

/// <H> = E(tau)/2 + E(tau0)/2 - E/2 for eigenstate preparation with eigenvalue E.
double expectation_total_energy(const ClassicalState& cs, const ModelParams& p, double E, double tau);

/// tau* = tau0 - p~(tau0) / B and the value of <H> there.
double total_energy_argmin(const ClassicalState& cs, const ModelParams& p);
double total_energy_minimum(const ClassicalState& cs, const ModelParams& p, double E);

/// Total energy operator E(tau) - H0 / 2.
QuantOperator total_energy_operator(const ClassicalState& cs, const ModelParams& p, double tau);
/// H = H0 + v(tau) P
QuantOperator hamiltonian_operator(const ClassicalState& cs, const ModelParams& p, double tau);

/// max over probes of ||[A, B] f|| / ||f||
double commutator_residual(const QuantOperator& a, const QuantOperator& b, const std::vector<WaveFunction>& probes);

/// Gaussian state exp(a x^2 + b x + c) in the position representation.
struct GaussianState {
  cplx a, b, c;
  WaveFunction wavefunction() const { return complex_gaussian(a, b, c); }
};

/// Position-space Gaussian of a Gaussian spectral packet.
GaussianState gaussian_state_of_packet(const SpectralAmplitude& packet, const ModelParams& p);

/// Oracle (a): evolves the Gaussian parameters under -i hbar d/dtau psi = H psi,
/// H = -B x - (1 - v) P being affine in (x, P).
GaussianState evolve_gaussian(const ClassicalState& cs, const ModelParams& p, const GaussianState& g0, double tau);

/// c_E(tau) = exp(-i E Delta tau / hbar) <E|psi(tau)>, in closed form for a Gaussian psi.
cplx spectral_coefficient(const GaussianState& g, const ModelParams& p, double E, double dtau);

struct OracleResult {
  std::vector<double> E;
  std::vector<cplx> c_gaussian;         ///< oracle (a)
  std::vector<cplx> c_characteristics;  ///< oracle (b)
  double max_oracle_disagreement = 0.0;
  long total_steps = 0;                 ///< integrator steps of oracle (b)
  GaussianState final_state{};
};

/// Runs both oracles on the grid; throws ConvergenceError if they disagree by more than 1e-8.
OracleResult oracle_propagate(const ClassicalState& cs, const ModelParams& p, const SpectralAmplitude& packet,
                              double tau, const std::vector<double>& grid);

/// n equally spaced points covering the evolved packet (+- 8 sigma around E0 + Delta E).
std::vector<double> packet_grid(const ClassicalState& cs, const ModelParams& p, const SpectralAmplitude& packet,
                                double tau, int n);

/// int |c_E(tau)|^2 dE of the closed form.
double closed_form_norm(const ClassicalState& cs, const ModelParams& p, const SpectralAmplitude& packet, double tau);

/// <psi| E(tau) - H0/2 |psi> / <psi|psi> by quadrature on the position-space state.
double packet_total_energy(const ClassicalState& cs, const ModelParams& p, const GaussianState& g, double tau);

}  // namespace pext
