#include "pext/orbits.hpp"

#include "pext/conventions.hpp"
#include "pext/group.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>

namespace pext {

namespace {

Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double rel) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s[0] : 0.0;
  const double thr = rel * std::max(1.0, smax);
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s[i] > thr) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

int sign_of(double x, double tol) { return x > tol ? 1 : (x < -tol ? -1 : 0); }

int family_of(double u0, double u1, double tol) {
  const int sp = sign_of(u0 + u1, tol), sm = sign_of(u0 - u1, tol);
  if (sp > 0 && sm > 0) return 1;
  if (sp < 0 && sm < 0) return 2;
  if (sp > 0 && sm < 0) return 3;
  if (sp < 0 && sm > 0) return 4;
  if (sp == 0 && sm > 0) return 5;
  if (sp == 0 && sm < 0) return 6;
  if (sp > 0 && sm == 0) return 7;
  if (sp < 0 && sm == 0) return 8;
  return 0;
}

}  // namespace

const char* orbit_case_name(OrbitCase c) {
  switch (c) {
    case OrbitCase::A: return "CaseA";
    case OrbitCase::B: return "CaseB";
    case OrbitCase::C: return "CaseC";
  }
  return "?";
}

Eigen::MatrixXd Subalgebra::matrix() const {
  Eigen::MatrixXd m(4, dim());
  for (int i = 0; i < dim(); ++i) m.col(i) = basis[i].coeffs();
  return m;
}

double Subalgebra::closure_defect(const ModelParams& p) const {
  if (basis.empty()) return 0.0;
  const Eigen::MatrixXd m = matrix();
  const auto qr = m.colPivHouseholderQr();
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(4, qr.rank());
  double worst = 0.0;
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j) {
      const Vec4 b = bracket(basis[i], basis[j], p).coeffs();
      const Vec4 r = b - q * (q.transpose() * b);
      worst = std::max(worst, r.norm() / std::max(1.0, b.norm()));
    }
  return worst;
}

Subalgebra Subalgebra::case_a() {
  return {"(J,P+,I)", {AlgebraElement::basis(kJ), AlgebraElement(1, 1, 0, 0), AlgebraElement::basis(kI)}};
}

Subalgebra Subalgebra::full() {
  return {"full", {AlgebraElement::basis(kP0), AlgebraElement::basis(kP1), AlgebraElement::basis(kJ),
                   AlgebraElement::basis(kI)}};
}

Subalgebra Subalgebra::wh() {
  return {"wh", {AlgebraElement::basis(kP0), AlgebraElement::basis(kP1), AlgebraElement::basis(kI)}};
}

Mat4 kirillov_form(const CoadjointPoint& zeta, const ModelParams& p) {
  const auto c = structure_tensor(p);
  Mat4 k = Mat4::Zero();
  for (int A = 0; A < 4; ++A)
    for (int B = 0; B < 4; ++B)
      for (int C = 0; C < 4; ++C) k(A, B) += zeta[C] * c[C][A][B];
  return k;
}

Subalgebra stability_subalgebra(const CoadjointPoint& zeta, const ModelParams& p) {
  const Eigen::MatrixXd ns = null_space(kirillov_form(zeta, p), 1e-10);
  Subalgebra s{"stabilizer", {}};
  for (int i = 0; i < ns.cols(); ++i) s.basis.emplace_back(Vec4(ns.col(i)));
  return s;
}

int orbit_dimension(const CoadjointPoint& zeta, const ModelParams& p) {
  return 4 - stability_subalgebra(zeta, p).dim();
}

double default_orbit_tolerance(const CoadjointPoint& zeta) {
  return 1e-10 * std::max(1.0, zeta.coeffs().cwiseAbs().maxCoeff());
}

OrbitClass classify(const CoadjointPoint& zeta, const ModelParams& p, double tol) {
  if (tol < 0.0) tol = default_orbit_tolerance(zeta);
  OrbitClass oc;
  if (std::abs(zeta[kI]) > tol) {
    oc.tag = OrbitCase::A;
    oc.casimir = casimir_pairing(zeta, p);
    oc.z3 = zeta[kI];
  } else if (std::abs(zeta[kP0]) <= tol && std::abs(zeta[kP1]) <= tol) {
    oc.tag = OrbitCase::B;
    oc.z2 = zeta[kJ];
  } else {
    oc.tag = OrbitCase::C;
    oc.z0 = zeta[kP0];
    oc.z1 = zeta[kP1];
    oc.family = family_of(zeta[kP0], zeta[kP1], tol);
  }
  return oc;
}

bool on_orbit(const CoadjointPoint& mu, const CoadjointPoint& zeta, const ModelParams& p, double tol) {
  const OrbitClass oz = classify(zeta, p);
  const double scale = std::max({1.0, mu.coeffs().cwiseAbs().maxCoeff(), zeta.coeffs().cwiseAbs().maxCoeff()});
  auto close = [&](double a, double b, double s) { return std::abs(a - b) <= tol * std::max(1.0, s); };
  using conv::kSqrtMinusH;
  switch (oz.tag) {
    case OrbitCase::A: {
      if (!close(mu[kI], zeta[kI], scale)) return false;
      const double uu = mu[kP0] * mu[kP0] - mu[kP1] * mu[kP1];
      const double b2u3 = 2.0 * p.B() * mu[kI];
      const double u2 = uu * kSqrtMinusH / b2u3 - oz.casimir * kSqrtMinusH / b2u3;
      return close(mu[kJ], u2, std::max(std::abs(u2), scale));
    }
    case OrbitCase::B:
      return (mu.coeffs() - zeta.coeffs()).cwiseAbs().maxCoeff() <= tol * scale;
    case OrbitCase::C: {
      if (std::abs(mu[kI]) > tol * scale) return false;
      const double uu = mu[kP0] * mu[kP0] - mu[kP1] * mu[kP1];
      const double zz = zeta[kP0] * zeta[kP0] - zeta[kP1] * zeta[kP1];
      if (!close(uu, zz, scale * scale)) return false;
      return family_of(mu[kP0], mu[kP1], tol * scale) == oz.family;
    }
  }
  return false;
}

bool subordination_check(const Subalgebra& h, const CoadjointPoint& zeta, const ModelParams& p) {
  const double scale = std::max(1.0, zeta.coeffs().cwiseAbs().maxCoeff());
  for (int i = 0; i < h.dim(); ++i)
    for (int j = i + 1; j < h.dim(); ++j)
      if (std::abs(zeta.pair(bracket(h.basis[i], h.basis[j], p))) > 1e-12 * scale) return false;
  return true;
}

PukanszkyReport pukanszky_check(const Subalgebra& h, const CoadjointPoint& zeta, const ModelParams& p, int samples,
                                std::uint64_t seed) {
  PukanszkyReport r;
  r.subordinate = subordination_check(h, zeta, p);
  r.maximal = h.dim() == 4 - orbit_dimension(zeta, p) / 2;
  const Eigen::MatrixXd ann = null_space(h.matrix().transpose(), 1e-12);
  r.annihilator_dim = static_cast<int>(ann.cols());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  r.samples = samples;
  for (int s = 0; s < samples; ++s) {
    Vec4 u = zeta.coeffs();
    for (int k = 0; k < ann.cols(); ++k) u += coef(rng) * ann.col(k);
    if (!on_orbit(CoadjointPoint(u), zeta, p)) ++r.failures;
  }
  r.pukanszky = r.failures == 0;
  return r;
}

double kks_pairing(const CoadjointPoint& mu, const Vec4& v, const Vec4& w, const ModelParams& p) {
  const Mat4 k = kirillov_form(mu, p);
  const auto solver = k.completeOrthogonalDecomposition();
  const Vec4 x = solver.solve(v);
  const Vec4 y = solver.solve(w);
  return -x.dot(k * y);
}

}  // namespace pext
