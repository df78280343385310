#pragma once

// Index conventions for the (1+1)-dimensional extended Poincare algebra.
//
// Latin indices a, b run over {0, 1}; the metric is h_ab = diag(1, -1) and
// the Levi-Civita symbol has eps^{01} = -eps_{01} = 1.  Every signed formula
// in the library takes its signs from the functions below, never from
// hand-written literals.

namespace pext::conv {

/// sqrt(-det h).  Numerically 1, kept as a named factor so each formula
/// reads as its textbook transcription.
inline constexpr double kSqrtMinusH = 1.0;

/// h_ab (equal to h^ab for this metric).
constexpr double metric(int a, int b) noexcept {
  if (a != b) return 0.0;
  return a == 0 ? 1.0 : -1.0;
}

/// eps^{ab}
constexpr double eps_upper(int a, int b) noexcept {
  if (a == b) return 0.0;
  return a == 0 ? 1.0 : -1.0;
}

/// eps_{ab} = h_ac h_bd eps^{cd}
constexpr double eps_lower(int a, int b) noexcept {
  double s = 0.0;
  for (int c = 0; c < 2; ++c)
    for (int d = 0; d < 2; ++d) s += metric(a, c) * metric(b, d) * eps_upper(c, d);
  return s;
}

/// eps_a^{ b} = eps_{ac} h^{cb}  (first index down)
constexpr double eps_down_up(int a, int b) noexcept {
  double s = 0.0;
  for (int c = 0; c < 2; ++c) s += eps_lower(a, c) * metric(c, b);
  return s;
}

/// eps^a_{ b} = h^{ac} eps_{cb}  (first index up)
constexpr double eps_up_down(int a, int b) noexcept {
  double s = 0.0;
  for (int c = 0; c < 2; ++c) s += metric(a, c) * eps_lower(c, b);
  return s;
}

/// Runs the executable consistency checks of the conventions (raising and
/// lowering round trips, antisymmetry, eps^a_c eps^c_b = delta^a_b).
/// Returns true iff all hold.
bool self_test() noexcept;

}  // namespace pext::conv
