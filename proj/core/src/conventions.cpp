#include "pext/conventions.hpp"

namespace pext::conv {

static_assert(eps_upper(0, 1) == 1.0 && eps_lower(0, 1) == -1.0);
static_assert(eps_down_up(0, 1) == 1.0 && eps_down_up(1, 0) == 1.0);
static_assert(eps_up_down(0, 1) == -1.0 && eps_up_down(1, 0) == -1.0);

bool self_test() noexcept {
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      if (eps_upper(a, b) != -eps_upper(b, a)) return false;
      if (eps_lower(a, b) != -eps_lower(b, a)) return false;
      // lowering then raising both indices is the identity
      double up = 0.0;
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) up += metric(a, c) * metric(b, d) * eps_lower(c, d);
      if (up != eps_upper(a, b)) return false;
      // the mixed symbol squares to the identity (boost generator)
      double sq = 0.0;
      for (int c = 0; c < 2; ++c) sq += eps_up_down(a, c) * eps_up_down(c, b);
      if (sq != (a == b ? 1.0 : 0.0)) return false;
      if (eps_down_up(a, b) != -eps_up_down(b, a)) return false;
    }
  }
  return true;
}

}  // namespace pext::conv
