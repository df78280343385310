#include "pext/polynomial.hpp"
#include "pext/quantization.hpp"

#include <doctest.h>

using namespace pext;
using P = PolynomialObservable;

TEST_SUITE("polynomial") {
  TEST_CASE("parse and print") {
    const P f = P::parse("q^2 - 0.5qp + 1");
    CHECK(f.coeff(2, 0) == 1.0);
    CHECK(f.coeff(1, 1) == -0.5);
    CHECK(f.coeff(0, 0) == 1.0);
    CHECK(f.degree() == 2);
    CHECK(P::parse(f.to_string()) == f);
    CHECK(P::parse("-3 p^2 q").coeff(1, 2) == -3.0);
    CHECK(P().to_string() == "0");
    CHECK_THROWS_AS(P::parse("q^^2"), std::invalid_argument);
    CHECK_THROWS_AS(P::parse("x + 1"), std::invalid_argument);
  }

  TEST_CASE("arithmetic and evaluation") {
    const P f = P::q() * P::q() + P::p() * 2.0 - P::constant(1.0);
    CHECK(f(2.0, 3.0) == 9.0);
    CHECK((f * f)(1.0, 1.0) == 4.0);
    CHECK((f - f).terms().empty());
    CHECK(f.in_p2());
    CHECK_FALSE((f * P::q()).in_p2());
  }

  TEST_CASE("derivatives") {
    const P f = P::parse("q^3 p + 2qp^2");
    CHECK(f.d_dq() == P::parse("3q^2 p + 2p^2"));
    CHECK(f.d_dp() == P::parse("q^3 + 4qp"));
  }

  TEST_CASE("affine composition matches pointwise substitution") {
    const P f = P::parse("q^2 - 0.5qp + 3p + 1");
    const P g = f.compose_affine(0.3, -1.2, 0.5, 2.0, 0.7, -0.4);
    for (double q : {-1.0, 0.2, 1.7})
      for (double p : {-0.8, 0.0, 2.5})
        CHECK(g(q, p) == doctest::Approx(f(0.3 * q - 1.2 * p + 0.5, 2.0 * q + 0.7 * p - 0.4)).epsilon(1e-13));
  }

  TEST_CASE("Poisson bracket sign convention and Leibniz rule") {
    CHECK(poisson_bracket(P::q(), P::p()) == P::constant(-1.0));
    CHECK(poisson_bracket(P::p(), P::q()) == P::constant(1.0));
    const P f = P::parse("q^2 + p"), g = P::parse("qp - q");
    const P lhs = poisson_bracket(f, g);
    const P rhs = (f.d_dp() * g.d_dq() - f.d_dq() * g.d_dp());
    CHECK(lhs.distance(rhs) == 0.0);
  }

  TEST_CASE("distance") {
    CHECK(P::parse("q + 2p").distance(P::parse("q + 2.5p")) == doctest::Approx(0.5));
  }
}
