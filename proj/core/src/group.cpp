#include "pext/group.hpp"

#include "pext/conventions.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <boost/numeric/odeint.hpp>

#include <cmath>
#include <random>

namespace pext {

using conv::kSqrtMinusH;

const char* basis_name(int index) {
  static constexpr const char* names[] = {"P0", "P1", "J", "I"};
  if (index < 0 || index >= kDim) throw std::out_of_range("basis index");
  return names[index];
}

ModelParams::ModelParams(double central_charge, double hbar) : B_(central_charge), hbar_(hbar) {
  if (!std::isfinite(central_charge) || central_charge == 0.0)
    throw std::invalid_argument("central charge B must be finite and nonzero");
  if (!std::isfinite(hbar) || hbar <= 0.0) throw std::invalid_argument("hbar must be finite and positive");
}

AlgebraElement::AlgebraElement(const Vec4& v) : v_(v) {
  if (!v.allFinite()) throw std::invalid_argument("algebra element has non-finite components");
}

AlgebraElement AlgebraElement::basis(int index) {
  Vec4 v = Vec4::Zero();
  v[index] = 1.0;
  return AlgebraElement(v);
}

CoadjointPoint::CoadjointPoint(const Vec4& u) : u_(u) {
  if (!u.allFinite()) throw std::invalid_argument("coadjoint point has non-finite components");
}

StructureTensor structure_tensor(const ModelParams& p) {
  StructureTensor c{};
  auto set = [&c](int a, int b, const Vec4& v) {
    for (int k = 0; k < 4; ++k) {
      c[k][a][b] = v[k];
      c[k][b][a] = -v[k];
    }
  };
  // [P_a, J] = sqrt(-h) eps_a^b P_b
  for (int a = 0; a < 2; ++a) {
    Vec4 v = Vec4::Zero();
    for (int b = 0; b < 2; ++b) v[b] = kSqrtMinusH * conv::eps_down_up(a, b);
    set(a, kJ, v);
  }
  // [P_a, P_b] = B eps_ab I
  set(kP0, kP1, Vec4(0, 0, 0, p.B() * conv::eps_lower(0, 1)));
  return c;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y, const ModelParams& p) {
  return AlgebraElement(Vec4(ad_matrix(x, p) * y.coeffs()));
}

Mat4 ad_matrix(const AlgebraElement& x, const ModelParams& p) {
  const auto c = structure_tensor(p);
  Mat4 m = Mat4::Zero();
  for (int C = 0; C < 4; ++C)
    for (int B = 0; B < 4; ++B)
      for (int A = 0; A < 4; ++A) m(C, B) += x[A] * c[C][A][B];
  return m;
}

Mat2 lorentz_matrix(double alpha) {
  Mat2 l;
  const double ch = std::cosh(alpha), sh = std::sinh(alpha);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) l(a, b) = (a == b ? ch : 0.0) + kSqrtMinusH * conv::eps_up_down(a, b) * sh;
  return l;
}

namespace {

Mat2 eps_lower_matrix() {
  Mat2 e;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) e(a, b) = conv::eps_lower(a, b);
  return e;
}

}  // namespace

GroupElement compose(const GroupElement& g2, const GroupElement& g1, const ModelParams& p) {
  const Vec2 rotated = lorentz_matrix(g2.alpha) * g1.theta();
  const Vec2 theta = g2.theta() + rotated;
  const double cocycle = 0.5 * p.B() * g2.theta().dot(eps_lower_matrix() * rotated);
  return {theta[0], theta[1], g2.alpha + g1.alpha, g2.beta + g1.beta + cocycle};
}

GroupElement inverse(const GroupElement& g, const ModelParams&) {
  // The cocycle term vanishes on (g^{-1}, g) because eps is antisymmetric.
  const Vec2 theta = -(lorentz_matrix(-g.alpha) * g.theta());
  return {theta[0], theta[1], -g.alpha, -g.beta};
}

GroupElement exp_map(const AlgebraElement& x, const ModelParams& p) {
  if (x[kJ] == 0.0) return {x[kP0], x[kP1], 0.0, x[kI]};
  if (x[kP0] == 0.0 && x[kP1] == 0.0) return {0.0, 0.0, x[kJ], x[kI]};

  using State = std::array<double, 4>;
  const Vec2 v(x[kP0], x[kP1]);
  const Mat2 eps = eps_lower_matrix();
  const double B = p.B();
  // d/dt (theta, alpha, beta) for g(t) = exp(tX): the derivative of
  // compose(g, eps X) at eps = 0.
  auto flow = [&](const State& s, State& ds, double) {
    const Vec2 dtheta = lorentz_matrix(s[2]) * v;
    ds[0] = dtheta[0];
    ds[1] = dtheta[1];
    ds[2] = x[kJ];
    ds[3] = x[kI] + 0.5 * B * Vec2(s[0], s[1]).dot(eps * dtheta);
  };
  namespace ode = boost::numeric::odeint;
  State s{0.0, 0.0, 0.0, 0.0};
  auto stepper = ode::make_controlled(1e-13, 1e-13, ode::runge_kutta_fehlberg78<State>());
  ode::integrate_adaptive(stepper, flow, s, 0.0, 1.0, 0.05);
  return {s[0], s[1], s[2], s[3]};
}

AlgebraElement log_map(const GroupElement& g, const ModelParams& p) {
  // Initial guess: alpha and theta are exact (alpha(t) = t X^2 and theta is a
  // linear integral of Lambda); beta is corrected by the Newton steps.
  const double a = g.alpha;
  Mat2 avg;
  if (std::abs(a) < 1e-8) {
    avg = Mat2::Identity();
  } else {
    const double sh = std::sinh(a) / a, chm = (std::cosh(a) - 1.0) / a;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) avg(r, c) = (r == c ? sh : 0.0) + kSqrtMinusH * conv::eps_up_down(r, c) * chm;
  }
  const Vec2 vt = avg.lu().solve(g.theta());
  Vec4 x(vt[0], vt[1], a, g.beta);

  const Vec4 target = g.coords();
  const double scale = 1.0 + target.cwiseAbs().maxCoeff();
  for (int iter = 0; iter < 30; ++iter) {
    const Vec4 r = exp_map(AlgebraElement(x), p).coords() - target;
    if (r.cwiseAbs().maxCoeff() <= 1e-13 * scale) return AlgebraElement(x);
    Mat4 jac;
    for (int k = 0; k < 4; ++k) {
      const double h = 1e-6 * (1.0 + std::abs(x[k]));
      Vec4 xp = x, xm = x;
      xp[k] += h;
      xm[k] -= h;
      jac.col(k) = (exp_map(AlgebraElement(xp), p).coords() - exp_map(AlgebraElement(xm), p).coords()) / (2 * h);
    }
    x -= jac.partialPivLu().solve(r);
  }
  const Vec4 r = exp_map(AlgebraElement(x), p).coords() - target;
  if (r.cwiseAbs().maxCoeff() <= 1e-11 * scale) return AlgebraElement(x);
  throw ConvergenceError("log_map: Newton iteration did not converge");
}

Mat4 adjoint_matrix(const GroupElement& g, const ModelParams& p) {
  const Mat2 L = lorentz_matrix(g.alpha);
  const Vec2 th = g.theta();
  const double B = p.B();
  Mat4 m = Mat4::Zero();
  m.block<2, 2>(0, 0) = L;
  // theta^c eps_c^a sqrt(-h)
  for (int a = 0; a < 2; ++a) {
    double s = 0.0;
    for (int c = 0; c < 2; ++c) s += th[c] * conv::eps_down_up(c, a);
    m(a, kJ) = s * kSqrtMinusH;
  }
  m(kJ, kJ) = 1.0;
  // B theta^c eps_cd Lambda^d_b
  for (int b = 0; b < 2; ++b) {
    double s = 0.0;
    for (int c = 0; c < 2; ++c)
      for (int d = 0; d < 2; ++d) s += th[c] * conv::eps_lower(c, d) * L(d, b);
    m(kI, b) = B * s;
  }
  double tt = 0.0;  // theta^a theta_a
  for (int a = 0; a < 2; ++a) tt += conv::metric(a, a) * th[a] * th[a];
  m(kI, kJ) = -B / (2.0 * kSqrtMinusH) * tt;
  m(kI, kI) = 1.0;
  return m;
}

CoadjointPoint coadjoint_action(const GroupElement& g, const CoadjointPoint& zeta, const ModelParams& p) {
  const Mat4 ad_inv = adjoint_matrix(inverse(g, p), p);
  return CoadjointPoint(Vec4(ad_inv.transpose() * zeta.coeffs()));
}

double casimir_pairing(const CoadjointPoint& u, const ModelParams& p) {
  double uu = 0.0;
  for (int a = 0; a < 2; ++a) uu += conv::metric(a, a) * u[a] * u[a];
  return uu - 2.0 * (p.B() / kSqrtMinusH) * u[kJ] * u[kI];
}

double casimir_pairing(const AlgebraElement& v, const ModelParams& p) {
  return casimir_pairing(CoadjointPoint(v.coeffs()), p);
}

namespace {

Eigen::MatrixXd orthonormal_span(const Eigen::MatrixXd& cols) {
  if (cols.cols() == 0) return Eigen::MatrixXd(cols.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s[0] : 0.0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s[i] > 1e-10 * std::max(1.0, smax)) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace

Eigen::MatrixXd bracket_span(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const ModelParams& p) {
  Eigen::MatrixXd cols(4, a.cols() * b.cols());
  int k = 0;
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      cols.col(k++) = bracket(AlgebraElement(Vec4(a.col(i))), AlgebraElement(Vec4(b.col(j))), p).coeffs();
  return orthonormal_span(cols);
}

StructuralReport structural_report(const ModelParams& p, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("structural_report: samples must be >= 1");
  StructuralReport rep;
  rep.samples = samples;

  const Eigen::MatrixXd full = Eigen::MatrixXd::Identity(4, 4);
  Eigen::MatrixXd cur = full;
  rep.central_series.push_back(4);
  for (int k = 0; k < 8; ++k) {
    Eigen::MatrixXd next = bracket_span(full, cur, p);
    rep.central_series.push_back(static_cast<int>(next.cols()));
    if (next.cols() == cur.cols() || next.cols() == 0) break;
    cur = next;
  }
  cur = full;
  rep.derived_series.push_back(4);
  for (int k = 0; k < 8; ++k) {
    Eigen::MatrixXd next = bracket_span(cur, cur, p);
    rep.derived_series.push_back(static_cast<int>(next.cols()));
    if (next.cols() == cur.cols() || next.cols() == 0) break;
    cur = next;
  }

  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const AlgebraElement x = random_algebra_element(rng, 1.0);
    const Mat4 ad = ad_matrix(x, p);
    rep.max_abs_trace = std::max(rep.max_abs_trace, std::abs(ad.trace()));
    Eigen::EigenSolver<Mat4> es(ad, false);
    for (int i = 0; i < 4; ++i) {
      const auto ev = es.eigenvalues()[i];
      rep.max_imag_eigenvalue = std::max(rep.max_imag_eigenvalue, std::abs(ev.imag()));
      if (std::abs(ev.real()) > 1e-6) rep.has_nonzero_real_eigenvalue = true;
    }
  }
  return rep;
}

}  // namespace pext

namespace pext {

GroupElement random_group_element(std::mt19937_64& rng, double half_width) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  GroupElement g;
  g.theta0 = u(rng);
  g.theta1 = u(rng);
  g.alpha = u(rng);
  g.beta = u(rng);
  return g;
}

AlgebraElement random_algebra_element(std::mt19937_64& rng, double half_width) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  Vec4 v;
  for (int i = 0; i < 4; ++i) v[i] = u(rng);
  return AlgebraElement(v);
}

}  // namespace pext
