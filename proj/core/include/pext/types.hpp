#pragma once

#include <Eigen/Core>

#include <complex>
#include <stdexcept>
#include <string>

namespace pext {

using cplx = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;

/// Ordered basis (P0, P1, J, I) of the extended algebra.
enum Basis : int { kP0 = 0, kP1 = 1, kJ = 2, kI = 3 };

inline constexpr int kDim = 4;

const char* basis_name(int index);

/// Raised when an iterative numerical method fails to converge.  Never a
/// domain gap: every map in this library is globally defined.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Central charge B and Planck constant.  The metric is fixed to diag(1,-1).
class ModelParams {
 public:
  ModelParams() = default;
  ModelParams(double central_charge, double hbar);

  double B() const noexcept { return B_; }
  double hbar() const noexcept { return hbar_; }

 private:
  double B_ = 1.0;
  double hbar_ = 1.0;
};

/// Element V^A T_A of the extended algebra.
class AlgebraElement {
 public:
  AlgebraElement() : v_(Vec4::Zero()) {}
  explicit AlgebraElement(const Vec4& v);
  AlgebraElement(double p0, double p1, double j, double i) : AlgebraElement(Vec4(p0, p1, j, i)) {}

  static AlgebraElement basis(int index);

  double operator[](int i) const { return v_[i]; }
  const Vec4& coeffs() const noexcept { return v_; }

  AlgebraElement operator+(const AlgebraElement& o) const { return AlgebraElement(Vec4(v_ + o.v_)); }
  AlgebraElement operator-(const AlgebraElement& o) const { return AlgebraElement(Vec4(v_ - o.v_)); }
  AlgebraElement operator*(double s) const { return AlgebraElement(Vec4(v_ * s)); }
  friend AlgebraElement operator*(double s, const AlgebraElement& x) { return x * s; }

 private:
  Vec4 v_;
};

/// Global coordinates of g = exp(theta^a P_a) exp(alpha J) exp(beta I).
struct GroupElement {
  double theta0 = 0.0;
  double theta1 = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  static GroupElement identity() { return {}; }
  Vec2 theta() const { return {theta0, theta1}; }
  Vec4 coords() const { return {theta0, theta1, alpha, beta}; }
  static GroupElement from_coords(const Vec4& c) { return {c[0], c[1], c[2], c[3]}; }
};

/// Point u_A omega^A of the dual of the algebra.
class CoadjointPoint {
 public:
  CoadjointPoint() : u_(Vec4::Zero()) {}
  explicit CoadjointPoint(const Vec4& u);
  CoadjointPoint(double u0, double u1, double u2, double u3) : CoadjointPoint(Vec4(u0, u1, u2, u3)) {}

  double operator[](int i) const { return u_[i]; }
  const Vec4& coeffs() const noexcept { return u_; }

  /// <u, X>
  double pair(const AlgebraElement& x) const { return u_.dot(x.coeffs()); }

 private:
  Vec4 u_;
};

}  // namespace pext
