#pragma once

#include "pext/types.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace pext {

/// Structure constants of a finite-dimensional real Lie algebra,
/// [T_A, T_B] = c^C_{AB} T_C.
class StructureConstants {
 public:
  StructureConstants(std::string name, std::vector<std::string> basis_names);

  int dim() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }

  double operator()(int C, int A, int B) const { return c_[(C * n_ + A) * n_ + B]; }

  /// Sets [T_A, T_B] = sum_C coeffs[C] T_C and the antisymmetric partner.
  void set_bracket(int A, int B, const std::vector<double>& coeffs);

  /// Max |c^C_{AB} + c^C_{BA}| and the max Jacobi defect over basis triples.
  double antisymmetry_defect() const;
  double jacobi_defect() const;

  /// Throws std::invalid_argument unless antisymmetric and Jacobi to 1e-12.
  void validate() const;

  /// True when every constant is an exactly representable rational; always
  /// true for finite doubles, kept as a named predicate for the exact path.
  bool is_rational() const;

  /// Dimension of g / [g, g].
  int abelianization_dim() const;

 private:
  std::string name_;
  int n_;
  std::vector<std::string> names_;
  std::vector<double> c_;
};

namespace catalog {
StructureConstants extended_poincare(const ModelParams& p = {});  ///< "i12"
StructureConstants poincare_11();                                  ///< "p11", unextended
StructureConstants so21();                                         ///< "so21"
StructureConstants weyl_heisenberg(double B = 1.0);                ///< "wh"
StructureConstants abelian(int n);                                 ///< "abelian<n>"

/// Resolves one of the names above; throws std::invalid_argument otherwise.
StructureConstants by_name(const std::string& name, const ModelParams& p = {});
std::vector<std::string> names();
}  // namespace catalog

/// Parses the algebra definition JSON:
///   {"name": ..., "dim": n, "basis_names": [...],
///    "brackets": [[A, B, [c^0, ..., c^{n-1}]], ...]}
/// A and B are either integer indices or basis names.
StructureConstants algebra_from_json(const std::string& text);
StructureConstants load_algebra_file(const std::string& path);
std::string algebra_to_json(const StructureConstants& sc);

/// Basis of Lambda^k(g*): increasing index tuples in lexicographic order.
struct CochainSpace {
  int degree = 0;
  std::vector<std::vector<int>> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

CochainSpace cochain_space(int n, int k);

/// Chevalley-Eilenberg differential d: Lambda^k -> Lambda^{k+1} with trivial
/// coefficients, as a C(n,k+1) x C(n,k) matrix in the cochain_space bases.
/// Throws std::out_of_range unless 0 <= k <= n.
Eigen::MatrixXd ce_differential(int k, const StructureConstants& sc);

/// Rank by singular values above 1e-9 * (largest singular value).
int numeric_rank(const Eigen::MatrixXd& m);

/// Rank of d_k computed by exact rational Gaussian elimination.
int exact_differential_rank(int k, const StructureConstants& sc);

/// True iff d_{k+1} d_k vanishes identically in exact arithmetic.
bool exact_dd_vanishes(int k, const StructureConstants& sc);

/// Thrown when the floating-point and exact ranks disagree.
class RankMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// dim H^k = dim ker d_k - rank d_{k-1}.  Ranks from the SVD are
/// cross-checked against exact arithmetic; a mismatch throws RankMismatch.
int cohomology_dim(int k, const StructureConstants& sc);

/// All Betti numbers H^0 .. H^n.
std::vector<int> betti_numbers(const StructureConstants& sc);

}  // namespace pext
