#include "pext/jet.hpp"

#include <doctest.h>

#include <cmath>

using namespace pext;

namespace {

double factorial(int k) { return k <= 1 ? 1.0 : k * factorial(k - 1); }

}  // namespace

TEST_SUITE("jet") {
  TEST_CASE("variable and derivatives") {
    const Jet x = Jet::variable(0.3, 4);
    CHECK(x.value() == cplx(0.3));
    CHECK(x.derivative(1) == cplx(1.0));
    CHECK(x.derivative(2) == cplx(0.0));
  }

  TEST_CASE("exp, cosh and sinh against closed-form derivatives") {
    const double x0 = 0.7;
    const Jet x = Jet::variable(x0, Jet::kMaxOrder);
    const Jet e = exp(x * cplx(2.0));
    const Jet c = cosh(x), s = sinh(x);
    for (int k = 0; k <= Jet::kMaxOrder; ++k) {
      CHECK(std::abs(e.derivative(k) - std::pow(2.0, k) * std::exp(2 * x0)) < 1e-12 * std::pow(2.0, k) * std::exp(2 * x0));
      CHECK(std::abs(c.derivative(k) - (k % 2 ? std::sinh(x0) : std::cosh(x0))) < 1e-13);
      CHECK(std::abs(s.derivative(k) - (k % 2 ? std::cosh(x0) : std::sinh(x0))) < 1e-13);
    }
  }

  TEST_CASE("products follow the Leibniz rule") {
    const Jet x = Jet::variable(1.2, 6);
    const Jet f = x * x * x;  // x^3
    CHECK(std::abs(f.derivative(1) - 3 * 1.44) < 1e-13);
    CHECK(std::abs(f.derivative(3) - 6.0) < 1e-13);
    CHECK(std::abs(f.derivative(4)) < 1e-13);
  }

  TEST_CASE("complex exponent") {
    const cplx a(0.2, -1.5);
    const Jet e = exp(Jet::variable(0.4, 5) * a);
    for (int k = 0; k <= 5; ++k) CHECK(std::abs(e.derivative(k) - std::pow(a, k) * std::exp(a * 0.4)) < 1e-12);
  }

  TEST_CASE("differentiate, truncate and scale") {
    const Jet e = exp(Jet::variable(0.0, 6));
    const Jet d = e.differentiate();
    CHECK(d.order() == 5);
    for (int k = 0; k <= 5; ++k) CHECK(std::abs(d[k] - 1.0 / factorial(k)) < 1e-15);
    CHECK(e.truncated(2).order() == 2);
    const Jet s = e.scaled(3.0);  // h -> e^(3h)
    for (int k = 0; k <= 6; ++k) CHECK(std::abs(s.derivative(k) - std::pow(3.0, k)) < 1e-12 * std::pow(3.0, k));
  }
}
