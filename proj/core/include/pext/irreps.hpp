#pragma once

#include "pext/orbits.hpp"
#include "pext/quadrature.hpp"
#include "pext/types.hpp"
#include "pext/wavefunction.hpp"

#include <cstdint>
#include <vector>

namespace pext {

/// Labels of an irreducible unitary representation.
///   A: (c2 = zeta^A zeta_A, z3 = zeta_3 != 0), carrier L^2(R) in theta^1
///   B: z2, carrier C
///   C: (z0, z1) != 0, carrier L^2(R) in the rapidity alpha
struct RepParams {
  OrbitCase family = OrbitCase::A;
  double c2 = 0.0;
  double z3 = -1.0;
  double z2 = 0.0;
  double z0 = 0.0;
  double z1 = 0.0;
  ModelParams model{};

  static RepParams case_a(double c2, double z3, const ModelParams& p = {});
  static RepParams case_b(double z2, const ModelParams& p = {});
  static RepParams case_c(double z0, double z1, const ModelParams& p = {});
  /// Labels of the orbit through zeta.
  static RepParams from_orbit(const CoadjointPoint& zeta, const ModelParams& p = {});

  /// Representative point of the orbit used for induction:
  ///   A: (0, 0, -c2 sqrt(-h) / (2 B z3), z3), B: (0, 0, z2, 0), C: (z0, z1, 0, 0).
  CoadjointPoint base_point() const;
  /// Subalgebra whose subgroup H is induced from: (J, P+, I), full, wh.
  Subalgebra inducing_subalgebra() const;
};

/// Whether g lies in the inducing subgroup H (to 1e-12 relative).
bool in_subgroup(const RepParams& rep, const GroupElement& g);

/// One-dimensional representation chi of H; throws std::invalid_argument if h is not in H.
cplx character(const RepParams& rep, const GroupElement& h);

/// Delta_H(h) = |det Ad h|^-1 restricted to H: e^alpha for A, 1 for B and C.
double subgroup_modulus(const RepParams& rep, const GroupElement& h);

/// T(g) f by closure composition (affine argument map times phase).
WaveFunction rep_apply(const RepParams& rep, const GroupElement& g, const WaveFunction& f);

struct GeneratorOptions {
  bool allow_stencil = true;  ///< 5-point stencil with step 1e-4 * width when f has no analytic jets
};

/// rho(X) f; rho(X) = d/dt T(exp(tX)) at t = 0.
WaveFunction generator_apply(const RepParams& rep, const AlgebraElement& x, const WaveFunction& f,
                             const GeneratorOptions& opt = {});
WaveFunction generator_apply(const RepParams& rep, Basis b, const WaveFunction& f, const GeneratorOptions& opt = {});

/// max over probes of ||T(g2)T(g1)f - T(g2 g1)f|| / ||f||
double verify_homomorphism(const RepParams& rep, const GroupElement& g2, const GroupElement& g1,
                           const std::vector<WaveFunction>& probes);

/// max over probes of | ||T(g)f||^2 - ||f||^2 | / ||f||^2, and over probe pairs of
/// |<T(g)f, T(g)k> - <f, k>| / (||f|| ||k||).
double verify_unitarity(const RepParams& rep, const GroupElement& g, const std::vector<WaveFunction>& probes);

struct CommutatorReport {
  double commutator = 0.0;       ///< max ||[rho(A), rho(B)]f - rho([A, B])f|| / ||f||
  double anti_hermiticity = 0.0; ///< max |<rho(X)f, k> + <f, rho(X)k>| / (||f|| ||k||)
};

CommutatorReport verify_commutators(const RepParams& rep, const std::vector<WaveFunction>& probes);

/// A: ||2B rho(I)rho(J)f - sqrt(-h)(rho(P^a)rho(P_a) + c2)f|| / ||f||
/// B, C: ||(rho(P^a)rho(P_a) - 2(B / sqrt(-h)) rho(J)rho(I) + zeta^A zeta_A)f|| / ||f||
double verify_casimir(const RepParams& rep, const std::vector<WaveFunction>& probes);

/// ||(T(exp tX)f - T(exp -tX)f) / 2t - rho(X)f|| / ||f|| for each step t.
std::vector<double> generator_difference_errors(const RepParams& rep, const AlgebraElement& x, const WaveFunction& f,
                                                const std::vector<double>& steps);

/// Decomposition g = h s(x) with h in H and s the section of the family:
///   A: s(x) = exp(x P1); B: s = e; C: s(x) = exp(x J).
struct CosetDecomposition {
  GroupElement h;
  double x = 0.0;
};

CosetDecomposition coset_decompose(const RepParams& rep, const GroupElement& g);
GroupElement section(const RepParams& rep, double x);

/// F(g) = Delta_H(h)^{-1/2} chi(h) f(x) for g = h s(x).
cplx induced_lift(const RepParams& rep, const WaveFunction& f, const GroupElement& g);

/// max over samples of |F(h g) - Delta_H(h)^{-1/2} chi(h) F(g)| for random h in H, g.
double verify_induced_condition(const RepParams& rep, const WaveFunction& f, int samples, std::uint64_t seed);

/// max over samples of |[T(g) f](x) - F(s(x) g)|: the realized action agrees
/// with right translation of the lifted function.
double verify_realization(const RepParams& rep, const WaveFunction& f, int samples, std::uint64_t seed);

/// Fixed set of 20 non-identity elements; returns the smallest, over the set,
/// of max over probes ||T(g)f - f|| / ||f||.
double faithfulness_margin(const RepParams& rep, const std::vector<WaveFunction>& probes);
std::vector<GroupElement> faithfulness_test_set();

/// Probes for the carrier space of rep: hermite_probes() for cases A and C,
/// two amplitudes for case B.
std::vector<WaveFunction> carrier_probes(const RepParams& rep);

}  // namespace pext
