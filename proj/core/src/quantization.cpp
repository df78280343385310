#include "pext/quantization.hpp"

#include "pext/conventions.hpp"
#include "pext/group.hpp"
#include "pext/orbits.hpp"
#include "pext/quadrature.hpp"

#include <cmath>
#include <cstdio>

namespace pext {

using conv::kSqrtMinusH;

namespace {
constexpr cplx kImag{0.0, 1.0};
}

Vec2 PhasePoint::spacetime(const ModelParams& m) const { return {-p / m.B(), -q - p / m.B()}; }

PhasePoint PhasePoint::from_spacetime(const Vec2& qa, const ModelParams& m) {
  return {qa[0] - qa[1], -m.B() * qa[0]};
}

std::array<PolynomialObservable, 2> spacetime_polynomials(const ModelParams& p) {
  using P = PolynomialObservable;
  const double B = p.B();
  return {P::p() * (-1.0 / B), P::q() * -1.0 + P::p() * (-1.0 / B)};
}

std::array<PolynomialObservable, 4> comoment_polynomials(const ModelParams& p, double mass, double u2_offset) {
  using P = PolynomialObservable;
  const double B = p.B();
  const auto qa = spacetime_polynomials(p);
  std::array<P, 4> u;
  for (int a = 0; a < 2; ++a) {
    P s;
    for (int b = 0; b < 2; ++b) s = s + qa[b] * (B * conv::eps_lower(b, a));
    u[a] = s;
  }
  P qq;  // q_a q^a
  for (int a = 0; a < 2; ++a) qq = qq + qa[a] * qa[a] * conv::metric(a, a);
  u[kJ] = P::constant(mass * mass / (2.0 * B) + u2_offset) + qq * (B / (2.0 * kSqrtMinusH));
  u[kI] = P::constant(-1.0);
  return u;
}

CoadjointPoint comoments(const PhasePoint& s, const ModelParams& p, double mass, double u2_offset) {
  const double B = p.B();
  const Vec2 qa = s.spacetime(p);
  Vec4 u;
  for (int a = 0; a < 2; ++a) {
    double v = 0.0;
    for (int b = 0; b < 2; ++b) v += B * qa[b] * conv::eps_lower(b, a);
    u[a] = v;
  }
  double qq = 0.0;
  for (int a = 0; a < 2; ++a) qq += conv::metric(a, a) * qa[a] * qa[a];
  u[kJ] = mass * mass / (2.0 * B) + B / (2.0 * kSqrtMinusH) * qq + u2_offset;
  u[kI] = -1.0;
  return CoadjointPoint(u);
}

CoadjointPoint momentum_map(const PhasePoint& s, const ModelParams& p, double mass) {
  return CoadjointPoint(Vec4(comoments(s, p, mass).coeffs() / p.hbar()));
}

PolynomialObservable poisson_bracket(const PolynomialObservable& f, const PolynomialObservable& g) {
  if (f.degree() > 2 || g.degree() > 2)
    throw QuantizationObstruction(
        "Poisson bracket restricted to P^2: degree > 2 inputs leave the quantizable subalgebra (Groenewold-Van Hove)");
  return (f.d_dq() * g.d_dp() - f.d_dp() * g.d_dq()) * -1.0;
}

WaveFunction QuantOperator::apply(const WaveFunction& f) const {
  if (f.is_amplitude()) throw std::invalid_argument("quantized operators act on functions of x");
  if (f.max_order() < 2) throw std::domain_error("quantized operators need twice differentiable functions");
  const QuantOperator op = *this;
  auto eval = [op, f](double x, int order) {
    const Jet fj = f.jet(x, order + 2);
    const Jet d1 = fj.differentiate();
    const Jet d2 = d1.differentiate();
    const Jet f0 = fj.truncated(order), f1 = d1.truncated(order);
    const Jet X = Jet::variable(x, order);
    const cplx mih = -kImag * op.hbar;  // P = mih d/dx
    Jet out = f0 * cplx(op.c0) + X * f0 * cplx(op.cx) + f1 * (mih * op.cp) + X * X * f0 * cplx(op.cxx);
    // (xP + Px)/2 = mih (x d/dx + 1/2)
    out = out + (X * f1 + f0 * cplx(0.5)) * (mih * op.cxp);
    out = out + d2 * (mih * mih * op.cpp);
    return out;
  };
  return WaveFunction(eval, f.decay(), f.hint(), f.max_order() - 2);
}

QuantOperator QuantOperator::operator+(const QuantOperator& o) const {
  if (hbar != o.hbar) throw std::invalid_argument("adding operators with different hbar");
  return {c0 + o.c0, cx + o.cx, cp + o.cp, cxx + o.cxx, cxp + o.cxp, cpp + o.cpp, hbar};
}

QuantOperator QuantOperator::operator*(double s) const {
  return {c0 * s, cx * s, cp * s, cxx * s, cxp * s, cpp * s, hbar};
}

std::string QuantOperator::describe() const {
  std::string out;
  auto term = [&](double c, const char* what) {
    if (c == 0.0) return;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", std::abs(c));
    out += c < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + ");
    out += buf;
    if (*what) {
      out += "*";
      out += what;
    }
  };
  term(c0, "");
  term(cx, "x");
  term(cp, "P");
  term(cxx, "x^2");
  term(cxp, "(xP+Px)/2");
  term(cpp, "P^2");
  char h[64];
  std::snprintf(h, sizeof h, "%.17g", hbar);
  return (out.empty() ? std::string("0") : out) + "  [P = -i*" + h + "*d/dx]";
}

QuantOperator quantize(const PolynomialObservable& f, const ModelParams& p) {
  if (f.degree() > 2)
    throw QuantizationObstruction("no quantization of degree > 2 observables extends the Schrodinger representation "
                                  "(Groenewold-Van Hove): " + f.to_string());
  QuantOperator op;
  op.hbar = p.hbar();
  op.c0 = f.coeff(0, 0);
  op.cx = f.coeff(1, 0);
  op.cp = f.coeff(0, 1);
  op.cxx = f.coeff(2, 0);
  op.cxp = f.coeff(1, 1);
  op.cpp = f.coeff(0, 2);
  return op;
}

double hermiticity_residual(const QuantOperator& op, const std::vector<WaveFunction>& probes) {
  double worst = 0.0;
  std::vector<WaveFunction> images;
  std::vector<double> norms;
  for (const auto& f : probes) {
    images.push_back(op.apply(f));
    norms.push_back(norm(f));
  }
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = i; j < probes.size(); ++j) {
      const cplx d = inner_product(images[i], probes[j]) - inner_product(probes[i], images[j]);
      worst = std::max(worst, std::abs(d) / (norms[i] * norms[j]));
    }
  return worst;
}

double verify_dirac(const ModelParams& p, double mass, const std::vector<WaveFunction>& probes,
                    std::optional<double> zeta3) {
  const double z3 = zeta3.value_or(-1.0 / p.hbar());
  const auto u = comoment_polynomials(p, mass);
  double worst = 0.0;
  for (const auto& f : probes) {
    const double nf = norm(f);
    for (int A = 0; A < 4; ++A)
      for (int B = A + 1; B < 4; ++B) {
        const QuantOperator qa = quantize(u[A], p), qb = quantize(u[B], p);
        const WaveFunction lhs = quantize(poisson_bracket(u[A], u[B]), p).apply(f);
        // +i z3 (Qa Qb - Qb Qa) f
        const WaveFunction ab = qa.apply(qb.apply(f)), ba = qb.apply(qa.apply(f));
        const WaveFunction res = linear_combination({1.0, kImag * z3, -kImag * z3}, {lhs, ab, ba});
        worst = std::max(worst, norm(res) / nf);
      }
  }
  return worst;
}

RepParams quantum_rep(const ModelParams& p, double mass) {
  const double h = p.hbar();
  return RepParams::case_a(mass * mass / (kSqrtMinusH * h * h), -1.0 / h, p);
}

PolynomialObservable left_action(const GroupElement& g, const PolynomialObservable& f, const ModelParams& p) {
  const double B = p.B();
  const Mat2 L = lorentz_matrix(g.alpha);
  // (q, p) -> q^a:  q^0 = -p/B, q^1 = -q - p/B
  Eigen::Matrix2d M;
  M << 0.0, -1.0 / B, -1.0, -1.0 / B;
  // q^a -> (q, p):  q = q^0 - q^1, p = -B q^0
  Eigen::Matrix2d N;
  N << 1.0, -1.0, -B, 0.0;
  const Eigen::Matrix2d A = N * L * M;
  const Vec2 b = N * g.theta();
  return f.compose_affine(A(0, 0), A(0, 1), b[0], A(1, 0), A(1, 1), b[1]);
}

double verify_covariance(const GroupElement& g, const PolynomialObservable& f, const ModelParams& p, double mass,
                         const std::vector<WaveFunction>& probes) {
  const RepParams rep = quantum_rep(p, mass);
  const QuantOperator lhs_op = quantize(left_action(g, f, p), p);
  const QuantOperator op = quantize(f, p);
  const GroupElement ginv = inverse(g, p);
  double worst = 0.0;
  for (const auto& k : probes) {
    const WaveFunction lhs = lhs_op.apply(k);
    const WaveFunction rhs = rep_apply(rep, ginv, op.apply(rep_apply(rep, g, k)));
    worst = std::max(worst, distance(lhs, rhs) / norm(k));
  }
  return worst;
}

double pullback_residual(const PhasePoint& s, const ModelParams& p, double mass, double h) {
  const Vec4 dq = (momentum_map({s.q + h, s.p}, p, mass).coeffs() - momentum_map({s.q - h, s.p}, p, mass).coeffs()) /
                  (2.0 * h);
  const Vec4 dp = (momentum_map({s.q, s.p + h}, p, mass).coeffs() - momentum_map({s.q, s.p - h}, p, mass).coeffs()) /
                  (2.0 * h);
  const double b = kks_pairing(momentum_map(s, p, mass), dq, dp, p);
  // Omega = -dp ^ dq gives Omega(e_q, e_p) = 1
  return std::abs(b - 1.0 / p.hbar());
}

}  // namespace pext
