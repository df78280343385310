#include "pext/dynamics.hpp"
#include "pext/quadrature.hpp"
#include "pext/quantization.hpp"

#include <doctest.h>

#include <cmath>

using namespace pext;

TEST_SUITE("dynamics") {
  const ModelParams unit(1.0, 1.0);

  TEST_CASE("classical trajectory kinematics") {
    const ModelParams p(-1.5, 1.0);
    const ClassicalState cs{0.4, 0.8, 0.3, 1.2};
    const double h = 1e-5;
    for (double tau : {-1.0, 0.3, 2.0}) {
      const auto x = classical_trajectory(cs, p, tau);
      const double E = relativistic_energy(cs, p, tau);
      CHECK(E * E - x.ptilde * x.ptilde == doctest::Approx(cs.m * cs.m));
      const double dq1 = (classical_trajectory(cs, p, tau + h).q1 - classical_trajectory(cs, p, tau - h).q1) / (2 * h);
      CHECK(dq1 == doctest::Approx(velocity(cs, p, tau)).epsilon(1e-8));
      const double dp = (ptilde_at(cs, p, tau + h) - ptilde_at(cs, p, tau - h)) / (2 * h);
      CHECK(dp == doctest::Approx(p.B()).epsilon(1e-8));
      const double ds = (proper_time(cs, p, tau + h) - proper_time(cs, p, tau - h)) / (2 * h);
      CHECK(ds == doctest::Approx(cs.m / E).epsilon(1e-8));
    }
    CHECK(classical_trajectory(cs, p, cs.tau0).q1 == doctest::Approx(cs.q1_0));
  }

  TEST_CASE("invalid classical state") {
    CHECK_THROWS_AS(ClassicalState({0, 0, 0, -1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(ClassicalState({std::nan(""), 0, 0, 1}).validate(), std::invalid_argument);
  }

  TEST_CASE("h0 eigenfunctions") {
    const ModelParams p(1.3, 0.6);
    const QuantOperator h0 = quantize(h0_polynomial(p), p);
    for (double E : {-1.0, 0.5, 2.0}) {
      const auto psi = h0_eigenfunction(E, p);
      const auto hpsi = h0.apply(psi);
      for (double x : {-2.0, 0.1, 1.7}) CHECK(std::abs(hpsi(x) - E * psi(x)) < 1e-12);
    }
    CHECK(h0_polynomial(p).distance(potential_energy_polynomial(p) * -2.0) < 1e-15);
  }

  TEST_CASE("closed form satisfies the transport equation") {
    const ModelParams p(1.4, 0.8);
    const ClassicalState cs{0.0, -0.6, 0.2, 1.1};
    const auto packet = SpectralAmplitude::gaussian(0.4, 0.5);
    const cplx i(0, 1);
    const double h = 1e-5;
    for (double tau : {0.7, 1.9})
      for (double E : {-0.2, 0.4, 1.3}) {
        auto c = [&](double e, double t) { return c_closed_form(cs, p, e, t, packet); };
        const cplx dt = (c(E, tau + h) - c(E, tau - h)) / (2 * h);
        const cplx dE = (c(E + h, tau) - c(E - h, tau)) / (2 * h);
        const double v = velocity(cs, p, tau), dtau = tau - cs.tau0;
        const cplx rhs = -i / p.hbar() * v * (E + p.B() * dtau) * c(E, tau);
        CHECK(std::abs(dt + v * p.B() * dE - rhs) < 1e-8);
      }
    for (double E : {-0.3, 0.4}) CHECK(std::abs(c_closed_form(cs, p, E, cs.tau0, packet) - packet(E)) < 1e-15);
  }

  TEST_CASE("closed form agrees with both propagation oracles") {
    const ClassicalState cs{0.0, 0.3, 0.0, 1.0};
    const auto packet = SpectralAmplitude::gaussian(0.5, 0.4);
    const double tau = 2.0;
    const auto grid = packet_grid(cs, unit, packet, tau, 400);
    const auto o = oracle_propagate(cs, unit, packet, tau, grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k)
      worst = std::max(worst, std::abs(c_closed_form(cs, unit, grid[k], tau, packet) - o.c_characteristics[k]));
    CHECK(worst <= 1e-6);
    CHECK(o.max_oracle_disagreement <= 1e-8);
    CHECK(std::abs(closed_form_norm(cs, unit, packet, tau) - 1.0) <= 1e-8);
    CHECK(std::abs(norm_squared(o.final_state.wavefunction()) - 1.0) <= 1e-8);
  }

  TEST_CASE("packet total energy follows the centre energy") {
    const ClassicalState cs{0.0, -0.4, 0.0, 1.0};
    const auto packet = SpectralAmplitude::gaussian(0.2, 0.3);
    for (double tau : {0.5, 1.5}) {
      const auto g = evolve_gaussian(cs, unit, gaussian_state_of_packet(packet, unit), tau);
      CHECK(packet_total_energy(cs, unit, g, tau) == doctest::Approx(expectation_total_energy(cs, unit, 0.2, tau)).epsilon(1e-9));
    }
  }

  TEST_CASE("eigenstates stay eigenstates") {
    const ClassicalState cs{0.0, 0.5, 0.0, 1.0};
    const auto ev = evolve_eigenstate(cs, unit, 0.7, 1.3);
    CHECK(std::abs(ev.phase) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ev.E_final == doctest::Approx(0.7 + energy_shift(cs, unit, 1.3)));
    CHECK(transition_probability(cs, unit, ev.E_final, 0.7, 1.3) == 1);
    CHECK(transition_probability(cs, unit, ev.E_final + 0.01, 0.7, 1.3) == 0);
  }

  TEST_CASE("total energy minimum") {
    const ModelParams p(2.0, 1.0);
    const ClassicalState cs{0.0, 1.0, 0.5, 1.5};
    const double star = total_energy_argmin(cs, p);
    CHECK(star == doctest::Approx(0.0));
    const double E = 0.3;
    CHECK(std::abs(expectation_total_energy(cs, p, E, star) - total_energy_minimum(cs, p, E)) < 1e-12);
    CHECK(expectation_total_energy(cs, p, E, star - 0.1) > total_energy_minimum(cs, p, E));
    CHECK(expectation_total_energy(cs, p, E, star + 0.1) > total_energy_minimum(cs, p, E));
  }

  TEST_CASE("total energy commutes with h0, the Hamiltonian does not") {
    const ClassicalState cs{0.0, 0.5, 0.0, 1.0};
    const QuantOperator h0 = quantize(h0_polynomial(unit), unit);
    const auto probes = hermite_probes();
    CHECK(commutator_residual(total_energy_operator(cs, unit, 1.0), h0, probes) < 1e-10);
    CHECK(commutator_residual(hamiltonian_operator(cs, unit, 1.0), h0, probes) > 0.1);
  }

  TEST_CASE("packet validation") {
    CHECK_THROWS_AS(SpectralAmplitude::gaussian(0.0, 0.0), std::invalid_argument);
    CHECK(SpectralAmplitude::eigenstate(0.5).delta);
    CHECK_THROWS_AS(packet_grid(ClassicalState{}, unit, SpectralAmplitude::gaussian(0, 1), 1.0, 1), std::invalid_argument);
  }
}
