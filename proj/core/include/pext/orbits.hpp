#pragma once

#include "pext/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pext {

enum class OrbitCase { A, B, C };

const char* orbit_case_name(OrbitCase c);

/// Classification of the coadjoint orbit through a point.
struct OrbitClass {
  OrbitCase tag = OrbitCase::B;
  double casimir = 0.0;  ///< A: zeta^A zeta_A
  double z3 = 0.0;       ///< A: zeta_3
  double z2 = 0.0;       ///< B: zeta_2
  double z0 = 0.0;       ///< C: zeta_0
  double z1 = 0.0;       ///< C: zeta_1
  int family = 0;        ///< C: 1..8, see classify()
};

/// Span of a list of algebra elements.
struct Subalgebra {
  std::string name;
  std::vector<AlgebraElement> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  Eigen::MatrixXd matrix() const;  ///< 4 x dim, columns are basis vectors

  /// Max distance of [X_i, X_j] from the span (relative to |[X_i, X_j]|).
  double closure_defect(const ModelParams& p) const;

  static Subalgebra case_a();  ///< (J, P+, I) with P+ = P0 + P1
  static Subalgebra full();    ///< the whole algebra
  static Subalgebra wh();      ///< (P0, P1, I)
};

/// K_AB = <zeta, [T_A, T_B]>
Mat4 kirillov_form(const CoadjointPoint& zeta, const ModelParams& p);

/// Null space of the Kirillov form (singular values below 1e-10 * max(1, sigma_max)).
Subalgebra stability_subalgebra(const CoadjointPoint& zeta, const ModelParams& p);

int orbit_dimension(const CoadjointPoint& zeta, const ModelParams& p);

/// Default tolerance for sign and zero tests: 1e-10 * max(1, |zeta|_inf).
double default_orbit_tolerance(const CoadjointPoint& zeta);

/// Case A iff zeta_3 != 0; case B iff zeta_3 = zeta_0 = zeta_1 = 0; case C
/// otherwise.  Case C families follow the signs of (zeta_0 + zeta_1,
/// zeta_0 - zeta_1):
///   1 (+,+)  2 (-,-)  3 (+,-)  4 (-,+)  5 (0,+)  6 (0,-)  7 (+,0)  8 (-,0).
/// Families 1, 2 have zeta^a zeta_a > 0, 3, 4 have it < 0, 5..8 are null.
/// A negative tol selects default_orbit_tolerance.
OrbitClass classify(const CoadjointPoint& zeta, const ModelParams& p, double tol = -1.0);

/// Whether mu lies on the orbit through zeta, within relative tolerance tol.
bool on_orbit(const CoadjointPoint& mu, const CoadjointPoint& zeta, const ModelParams& p, double tol = 1e-9);

/// <zeta, [X, Y]> = 0 on all basis pairs of h, within 1e-12 * scale.
bool subordination_check(const Subalgebra& h, const CoadjointPoint& zeta, const ModelParams& p);

struct PukanszkyReport {
  bool subordinate = false;
  bool maximal = false;  ///< dim h = dim g - orbit_dim / 2
  bool pukanszky = false;
  int annihilator_dim = 0;
  int samples = 0;
  int failures = 0;
  bool passed() const { return subordinate && maximal && pukanszky; }
};

/// Samples zeta + h^perp with coefficients uniform in [-10, 10] and checks
/// orbit membership.  Maximality and Pukanszky are reported separately.
PukanszkyReport pukanszky_check(const Subalgebra& h, const CoadjointPoint& zeta, const ModelParams& p,
                                int samples = 100, std::uint64_t seed = 42);

/// Kirillov-Kostant-Souriau form on the tangent space of the orbit at mu:
/// b(xi_X, xi_Y) = -<mu, [X, Y]>, where the tangent vector of X is
/// (xi_X)_B = K_BC X^C.  The preimages X, Y are recovered by least squares.
double kks_pairing(const CoadjointPoint& mu, const Vec4& v, const Vec4& w, const ModelParams& p);

}  // namespace pext
