#pragma once

#include "pext/types.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace pext {

/// Structure constants c^C_{AB} of the extended algebra, [T_A, T_B] = c^C_{AB} T_C,
/// stored as c[C][A][B].
using StructureTensor = std::array<std::array<std::array<double, 4>, 4>, 4>;

StructureTensor structure_tensor(const ModelParams& p);

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y, const ModelParams& p);

/// Matrix of ad(x) in the basis (P0, P1, J, I): ad_matrix(x) * y = [x, y].
Mat4 ad_matrix(const AlgebraElement& x, const ModelParams& p);

/// Lambda(alpha)^a_b = delta^a_b cosh(alpha) + sqrt(-h) eps^a_b sinh(alpha).
Mat2 lorentz_matrix(double alpha);

/// g2 * g1 in global coordinates.
GroupElement compose(const GroupElement& g2, const GroupElement& g1, const ModelParams& p);

GroupElement inverse(const GroupElement& g, const ModelParams& p);

/// exp: algebra -> group.  Closed form on wh and on span{J, I}; otherwise the
/// left-invariant flow g' = g X is integrated with an adaptive 7(8)
/// Runge-Kutta-Fehlberg scheme.
GroupElement exp_map(const AlgebraElement& x, const ModelParams& p);

/// Inverse of exp_map by Newton iteration.  Throws ConvergenceError if the
/// residual does not drop below tolerance within the iteration budget.
AlgebraElement log_map(const GroupElement& g, const ModelParams& p);

/// (Ad g)^A_B; column B is the image of T_B.
Mat4 adjoint_matrix(const GroupElement& g, const ModelParams& p);

/// u_A = zeta_B (Ad g^{-1})^B_A
CoadjointPoint coadjoint_action(const GroupElement& g, const CoadjointPoint& zeta, const ModelParams& p);

/// u^A u_A = u^a u_a - 2 (B / sqrt(-h)) u_2 u_3
double casimir_pairing(const CoadjointPoint& u, const ModelParams& p);

/// <V, V> = V^a V_a - 2 (B / sqrt(-h)) V_2 V_3 for a vector of the algebra
/// given by its components V_A.
double casimir_pairing(const AlgebraElement& v, const ModelParams& p);

struct StructuralReport {
  std::vector<int> central_series;  ///< dims of g, [g,g], [g,[g,g]], ... until stable
  std::vector<int> derived_series;  ///< dims of g, [g,g], [[g,g],[g,g]], ... until stable
  double max_imag_eigenvalue = 0.0;
  double max_abs_trace = 0.0;
  bool has_nonzero_real_eigenvalue = false;
  int samples = 0;

  bool nilpotent() const { return !central_series.empty() && central_series.back() == 0; }
  bool solvable() const { return !derived_series.empty() && derived_series.back() == 0; }
};

/// Structural class checks; `samples` random X drawn uniformly in [-1, 1]^4.
StructuralReport structural_report(const ModelParams& p, int samples, std::uint64_t seed = 42);

/// Coordinates drawn uniformly in [-half_width, half_width]^4.
GroupElement random_group_element(std::mt19937_64& rng, double half_width);
AlgebraElement random_algebra_element(std::mt19937_64& rng, double half_width);

/// Orthonormal column basis of span{[x, y] : x in a, y in b}; a and b are column bases.
Eigen::MatrixXd bracket_span(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const ModelParams& p);

}  // namespace pext
