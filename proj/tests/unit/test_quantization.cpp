#include "pext/conventions.hpp"
#include "pext/group.hpp"
#include "pext/quadrature.hpp"
#include "pext/quantization.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace pext;
using P = PolynomialObservable;

namespace {

/// Values of Weyl-ordered operators on h0(x) = pi^(-1/4) exp(-x^2/2), from its derivatives.
cplx oracle_on_h0(const P& f, double x, double hbar) {
  const cplx i(0, 1);
  const double v = std::pow(std::numbers::pi, -0.25) * std::exp(-x * x / 2);
  const double d1 = -x * v, d2 = (x * x - 1) * v;
  return f.coeff(0, 0) * v + f.coeff(1, 0) * x * v + f.coeff(2, 0) * x * x * v - i * hbar * f.coeff(0, 1) * d1 -
         hbar * hbar * f.coeff(0, 2) * d2 - i * hbar * f.coeff(1, 1) * (x * d1 + 0.5 * v);
}

}  // namespace

TEST_SUITE("quantization") {
  TEST_CASE("comoments") {
    const ModelParams p(1.5, 1.0);
    const double m = 2.0, q = 0.3, pp = -0.7;
    const auto u = comoments(PhasePoint{q, pp}, p, m);
    CHECK(u[0] == doctest::Approx(-pp - 1.5 * q));
    CHECK(u[1] == doctest::Approx(pp));
    CHECK(u[2] == doctest::Approx(m * m / 3.0 - pp * q - 0.75 * q * q));
    CHECK(u[3] == -1.0);
    const auto poly = comoment_polynomials(p, m);
    for (int A = 0; A < 4; ++A) CHECK(poly[A](q, pp) == doctest::Approx(u[A]));
    CHECK(casimir_pairing(u, p) == doctest::Approx(m * m / conv::kSqrtMinusH));
  }

  TEST_CASE("spacetime coordinates") {
    const ModelParams p(2.0, 1.0);
    const PhasePoint s{0.4, -1.1};
    const Vec2 qa = s.spacetime(p);
    const PhasePoint back = PhasePoint::from_spacetime(qa, p);
    CHECK(back.q == doctest::Approx(s.q));
    CHECK(back.p == doctest::Approx(s.p));
    const auto polys = spacetime_polynomials(p);
    CHECK(poisson_bracket(polys[0], polys[1]) == P::constant(0.5));
  }

  TEST_CASE("Weyl-ordered operators against derivatives of h0") {
    const ModelParams p(1.0, 0.7);
    const auto h0 = hermite_function(0);
    for (const auto& text : {"1", "q", "p", "q^2", "qp", "p^2", "0.3q^2 - 1.2qp + 0.5p^2 + q - 2"}) {
      const P f = P::parse(text);
      const WaveFunction g = quantize(f, p).apply(h0);
      for (double x : {-1.3, 0.0, 0.6, 2.1}) CHECK(std::abs(g(x) - oracle_on_h0(f, x, 0.7)) < 1e-13);
    }
  }

  TEST_CASE("quantized observables are Hermitian") {
    const ModelParams p(1.0, 1.0);
    for (const auto& text : {"q", "p", "qp", "p^2 + q^2", "-0.5q^2 - qp + 0.845"})
      CHECK(hermiticity_residual(quantize(P::parse(text), p), hermite_probes()) < 1e-12);
  }

  TEST_CASE("Dirac condition holds for the physical sign only") {
    for (const ModelParams p : {ModelParams(1.0, 1.0), ModelParams(-2.0, 0.7)}) {
      CHECK(verify_dirac(p, 1.0, hermite_probes()) < 1e-9);
      CHECK(verify_dirac(p, 1.0, hermite_probes(), 1.0 / p.hbar()) > 0.1);
    }
  }

  TEST_CASE("degree bound") {
    const ModelParams p(1.0, 1.0);
    CHECK_THROWS_AS(quantize(P::parse("q^2 p"), p), QuantizationObstruction);
    CHECK_THROWS_AS(quantize(P::parse("p^3"), p), QuantizationObstruction);
    CHECK_THROWS_AS(poisson_bracket(P::parse("q^3"), P::p()), QuantizationObstruction);
    CHECK_NOTHROW(quantize(P::parse("q^2 + qp + p^2"), p));
  }

  TEST_CASE("left action composes as a pullback: (g2 g1) acts as g2 then g1") {
    const ModelParams p(1.3, 1.0);
    std::mt19937_64 rng(8);
    const P f = P::parse("q^2 - 0.5qp + p + 2");
    for (int i = 0; i < 10; ++i) {
      const auto g1 = random_group_element(rng, 1.0), g2 = random_group_element(rng, 1.0);
      const P a = left_action(compose(g2, g1, p), f, p);
      const P b = left_action(g1, left_action(g2, f, p), p);
      CHECK(a.distance(b) < 1e-12);
    }
  }

  TEST_CASE("covariance") {
    const ModelParams p(1.0, 1.0);
    std::mt19937_64 rng(12);
    for (const auto& text : {"q", "p", "qp", "q^2 + 0.3p^2"})
      CHECK(verify_covariance(random_group_element(rng, 1.0), P::parse(text), p, 1.0, hermite_probes()) < 1e-8);
  }

  TEST_CASE("quantum representation labels") {
    const auto rep = quantum_rep(ModelParams(1.0, 0.5), 2.0);
    CHECK(rep.c2 == doctest::Approx(16.0));
    CHECK(rep.z3 == doctest::Approx(-2.0));
  }

  TEST_CASE("momentum map pulls back the orbit form") {
    for (const ModelParams p : {ModelParams(1.0, 1.0), ModelParams(-2.0, 0.7)})
      for (double q : {-1.0, 0.5})
        for (double pp : {-0.3, 1.2}) CHECK(pullback_residual(PhasePoint{q, pp}, p, 1.0) < 1e-6);
  }
}
