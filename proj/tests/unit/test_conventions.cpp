#include "pext/conventions.hpp"

#include <doctest.h>

using namespace pext::conv;

TEST_SUITE("conventions") {
  TEST_CASE("metric and Levi-Civita values") {
    CHECK(metric(0, 0) == 1.0);
    CHECK(metric(1, 1) == -1.0);
    CHECK(metric(0, 1) == 0.0);
    CHECK(eps_upper(0, 1) == 1.0);
    CHECK(eps_upper(1, 0) == -1.0);
    CHECK(eps_lower(0, 1) == -1.0);
    CHECK(eps_lower(1, 0) == 1.0);
    CHECK(kSqrtMinusH == 1.0);
  }

  TEST_CASE("mixed epsilon squares to the identity") {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        double s = 0.0;
        for (int c = 0; c < 2; ++c) s += eps_up_down(a, c) * eps_up_down(c, b);
        CHECK(s == (a == b ? 1.0 : 0.0));
      }
  }

  TEST_CASE("eps_ac h^cb matches the explicit raise") {
    CHECK(eps_down_up(0, 1) == 1.0);
    CHECK(eps_down_up(1, 0) == 1.0);
    CHECK(eps_up_down(0, 1) == -1.0);
    CHECK(eps_up_down(1, 0) == -1.0);
  }

  TEST_CASE("self test") { CHECK(self_test()); }
}
