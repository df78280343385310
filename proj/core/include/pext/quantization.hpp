#pragma once

#include "pext/irreps.hpp"
#include "pext/polynomial.hpp"
#include "pext/types.hpp"
#include "pext/wavefunction.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pext {

/// Raised when an observable outside P^2 is quantized (Groenewold-Van Hove).
class QuantizationObstruction : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Point of the reduced phase space in light-cone coordinates
/// q = q^0 - q^1, p = -B q^0.
struct PhasePoint {
  double q = 0.0;
  double p = 0.0;

  /// (q^0, q^1) = (-p / B, -q - p / B)
  Vec2 spacetime(const ModelParams& m) const;
  static PhasePoint from_spacetime(const Vec2& qa, const ModelParams& m);
};

/// Comoments u_A(s): u_a = B q^b eps_ba, u_2 = m^2/2B + (B / 2 sqrt(-h)) q_a q^a + offset, u_3 = -1.
CoadjointPoint comoments(const PhasePoint& s, const ModelParams& p, double mass, double u2_offset = 0.0);

/// The same comoments as polynomials in (q, p), indexed by the basis (P0, P1, J, I).
std::array<PolynomialObservable, 4> comoment_polynomials(const ModelParams& p, double mass, double u2_offset = 0.0);

/// q^a as polynomials in (q, p).
std::array<PolynomialObservable, 2> spacetime_polynomials(const ModelParams& p);

/// mu(s) = u_A(s) / hbar
CoadjointPoint momentum_map(const PhasePoint& s, const ModelParams& p, double mass);

/// {f, g} = -(f_q g_p - f_p g_q), the bracket of the symplectic form -dp ^ dq.
/// Inputs of degree > 2 are rejected with QuantizationObstruction.
PolynomialObservable poisson_bracket(const PolynomialObservable& f, const PolynomialObservable& g);

/// c0 + cx x + cp P + cxx x^2 + cxp (x P + P x) / 2 + cpp P^2, with P = -i hbar d/dx.
struct QuantOperator {
  double c0 = 0.0, cx = 0.0, cp = 0.0, cxx = 0.0, cxp = 0.0, cpp = 0.0;
  double hbar = 1.0;

  WaveFunction apply(const WaveFunction& f) const;
  QuantOperator operator+(const QuantOperator& o) const;
  QuantOperator operator*(double s) const;
  std::string describe() const;
};

/// Extended metaplectic quantization of f in P^2 (symmetric ordering).
QuantOperator quantize(const PolynomialObservable& f, const ModelParams& p);

/// max over probe pairs of |<Of, k> - <f, Ok>| / (||f|| ||k||)
double hermiticity_residual(const QuantOperator& op, const std::vector<WaveFunction>& probes);

/// max over the six comoment pairs and probes of
/// ||Q({u_A, u_B}) f + i zeta3 [Q(u_A), Q(u_B)] f|| / ||f||, zeta3 = -1/hbar unless overridden.
double verify_dirac(const ModelParams& p, double mass, const std::vector<WaveFunction>& probes,
                    std::optional<double> zeta3 = std::nullopt);

/// Labels of the representation fixed by the momentum map:
/// c2 = m^2 / (sqrt(-h) hbar^2), z3 = -1 / hbar.
RepParams quantum_rep(const ModelParams& p, double mass);

/// f o l_g with l_g(q^a) = Lambda(alpha) q + theta.
PolynomialObservable left_action(const GroupElement& g, const PolynomialObservable& f, const ModelParams& p);

/// max over probes of ||Q(f o l_g) k - T(g^-1) Q(f) T(g) k|| / ||k||
double verify_covariance(const GroupElement& g, const PolynomialObservable& f, const ModelParams& p, double mass,
                         const std::vector<WaveFunction>& probes);

/// |b(dmu e_q, dmu e_p) - Omega(e_q, e_p) / hbar| at s, dmu by central differences of step h.
double pullback_residual(const PhasePoint& s, const ModelParams& p, double mass, double h = 1e-4);

}  // namespace pext
