#include "pext/irreps.hpp"

#include "pext/conventions.hpp"
#include "pext/group.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace pext {

using conv::kSqrtMinusH;

namespace {

constexpr cplx kImag{0.0, 1.0};

double scale_of(const GroupElement& g) { return std::max(1.0, g.coords().cwiseAbs().maxCoeff()); }

/// -c2 sqrt(-h) / (2 B z3), the zeta_2 of the case A base point.
double case_a_z2(const RepParams& r) { return -r.c2 * kSqrtMinusH / (2.0 * r.model.B() * r.z3); }

/// Coefficient jets of rho(X) = a(x) + b(x) d/dx.
struct FirstOrderOp {
  Jet a, b;
};

FirstOrderOp generator_coefficients(const RepParams& r, const AlgebraElement& X, double x, int order) {
  const Jet var = Jet::variable(x, order);
  const double B = r.model.B();
  switch (r.family) {
    case OrbitCase::A: {
      Jet a = Jet(kImag * r.z3 * X[kI], order);
      a = a + (Jet(-0.5 + kImag * case_a_z2(r), order) + var * var * (kImag * 0.5 * B * r.z3)) * cplx(X[kJ]);
      a = a + var * (kImag * B * r.z3 * X[kP0]);
      Jet b = var * cplx(-X[kJ]) + cplx(X[kP1] - X[kP0]);
      return {a, b};
    }
    case OrbitCase::C: {
      // rho(P_a) = i Lambda(alpha)^b_a zeta_b
      const Jet ch = cosh(var), sh = sinh(var);
      const double zeta[2] = {r.z0, r.z1};
      Jet a(0.0, order);
      for (int ai = 0; ai < 2; ++ai)
        for (int bi = 0; bi < 2; ++bi) {
          Jet lam = sh * cplx(kSqrtMinusH * conv::eps_up_down(bi, ai));
          if (ai == bi) lam = lam + ch;
          a = a + lam * (kImag * zeta[bi] * X[ai]);
        }
      return {a, Jet(X[kJ], order)};
    }
    case OrbitCase::B:
      break;
  }
  return {Jet(kImag * r.z2 * X[kJ], order), Jet(0.0, order)};
}

}  // namespace

RepParams RepParams::case_a(double c2, double z3, const ModelParams& p) {
  if (!std::isfinite(c2) || !std::isfinite(z3) || z3 == 0.0)
    throw std::invalid_argument("case A labels need finite c2 and nonzero z3");
  RepParams r;
  r.family = OrbitCase::A;
  r.c2 = c2;
  r.z3 = z3;
  r.model = p;
  return r;
}

RepParams RepParams::case_b(double z2, const ModelParams& p) {
  if (!std::isfinite(z2)) throw std::invalid_argument("case B label must be finite");
  RepParams r;
  r.family = OrbitCase::B;
  r.z2 = z2;
  r.z3 = 0.0;
  r.model = p;
  return r;
}

RepParams RepParams::case_c(double z0, double z1, const ModelParams& p) {
  if (!std::isfinite(z0) || !std::isfinite(z1) || (z0 == 0.0 && z1 == 0.0))
    throw std::invalid_argument("case C labels must be finite and not both zero");
  RepParams r;
  r.family = OrbitCase::C;
  r.z0 = z0;
  r.z1 = z1;
  r.z3 = 0.0;
  r.model = p;
  return r;
}

RepParams RepParams::from_orbit(const CoadjointPoint& zeta, const ModelParams& p) {
  const OrbitClass oc = classify(zeta, p);
  switch (oc.tag) {
    case OrbitCase::A: return case_a(oc.casimir, oc.z3, p);
    case OrbitCase::B: return case_b(oc.z2, p);
    case OrbitCase::C: return case_c(oc.z0, oc.z1, p);
  }
  throw std::logic_error("unreachable orbit case");
}

CoadjointPoint RepParams::base_point() const {
  switch (family) {
    case OrbitCase::A: return {0.0, 0.0, case_a_z2(*this), z3};
    case OrbitCase::B: return {0.0, 0.0, z2, 0.0};
    case OrbitCase::C: return {z0, z1, 0.0, 0.0};
  }
  return {};
}

Subalgebra RepParams::inducing_subalgebra() const {
  switch (family) {
    case OrbitCase::A: return Subalgebra::case_a();
    case OrbitCase::B: return Subalgebra::full();
    case OrbitCase::C: return Subalgebra::wh();
  }
  return {};
}

bool in_subgroup(const RepParams& rep, const GroupElement& g) {
  const double tol = 1e-12 * scale_of(g);
  switch (rep.family) {
    case OrbitCase::A: return std::abs(g.theta0 - g.theta1) <= tol;
    case OrbitCase::B: return true;
    case OrbitCase::C: return std::abs(g.alpha) <= tol;
  }
  return false;
}

cplx character(const RepParams& rep, const GroupElement& h) {
  if (!in_subgroup(rep, h)) throw std::invalid_argument("character: element is not in the inducing subgroup");
  switch (rep.family) {
    case OrbitCase::A: return std::exp(kImag * (h.alpha * case_a_z2(rep) + h.beta * rep.z3));
    case OrbitCase::B: return std::exp(kImag * h.alpha * rep.z2);
    case OrbitCase::C: return std::exp(kImag * (h.theta0 * rep.z0 + h.theta1 * rep.z1));
  }
  return 1.0;
}

double subgroup_modulus(const RepParams& rep, const GroupElement& h) {
  if (!in_subgroup(rep, h)) throw std::invalid_argument("subgroup_modulus: element is not in the inducing subgroup");
  return rep.family == OrbitCase::A ? std::exp(h.alpha) : 1.0;
}

WaveFunction rep_apply(const RepParams& rep, const GroupElement& g, const WaveFunction& f) {
  if (rep.family == OrbitCase::B) {
    if (!f.is_amplitude()) throw std::invalid_argument("case B acts on a one-dimensional amplitude");
    return WaveFunction::amplitude(std::exp(kImag * g.alpha * rep.z2) * f.amplitude_value());
  }
  if (f.is_amplitude()) throw std::invalid_argument("cases A and C act on functions on the real line");

  if (rep.family == OrbitCase::A) {
    const double B = rep.model.B(), z3 = rep.z3, z2 = case_a_z2(rep);
    const double t0 = g.theta0, t1 = g.theta1, a = g.alpha, b = g.beta;
    const double shrink = std::exp(-a), jac = std::exp(-0.5 * a), e2 = std::exp(-2.0 * a);
    auto eval = [=](double x, int order) {
      const Jet X = Jet::variable(x, order);
      const Jet u = X + cplx(t1);          // theta^1 + theta''^1
      const Jet w = -X + cplx(t0 - t1);    // theta''^0 - theta^1 - theta''^1
      const Jet inner = X * cplx(0.5 * B * t0) - (Jet(t0 * t0, order) - u * u) * cplx(0.25 * B) -
                        w * w * cplx(0.25 * B * e2) + cplx(b);
      const Jet phase = inner * cplx(z3) + cplx(z2 * a);
      const Jet fx = f.jet((x + t1 - t0) * shrink, order).scaled(shrink);
      return exp(phase * kImag) * fx * cplx(jac);
    };
    const QuadratureHint h{f.hint().center / shrink - t1 + t0, f.hint().width / shrink};
    return WaveFunction(eval, f.decay(), h, f.max_order());
  }

  // case C
  const double z0 = rep.z0, z1 = rep.z1, t0 = g.theta0, t1 = g.theta1, a = g.alpha;
  auto eval = [=](double al, int order) {
    const Jet A = Jet::variable(al, order);
    const Jet ch = cosh(A), sh = sinh(A);
    const double th[2] = {t0, t1}, zeta[2] = {z0, z1};
    Jet phase(0.0, order);
    for (int ai = 0; ai < 2; ++ai)
      for (int bi = 0; bi < 2; ++bi) {
        Jet lam = sh * cplx(kSqrtMinusH * conv::eps_up_down(ai, bi));
        if (ai == bi) lam = lam + ch;
        phase = phase + lam * cplx(th[bi] * zeta[ai]);
      }
    return exp(phase * kImag) * f.jet(al + a, order);
  };
  const QuadratureHint h{f.hint().center - a, f.hint().width};
  return WaveFunction(eval, f.decay(), h, f.max_order());
}

WaveFunction generator_apply(const RepParams& rep, const AlgebraElement& x, const WaveFunction& f,
                             const GeneratorOptions& opt) {
  if (rep.family == OrbitCase::B) {
    if (!f.is_amplitude()) throw std::invalid_argument("case B acts on a one-dimensional amplitude");
    return WaveFunction::amplitude(kImag * rep.z2 * x[kJ] * f.amplitude_value());
  }
  if (f.is_amplitude()) throw std::invalid_argument("cases A and C act on functions on the real line");

  if (f.max_order() >= 1) {
    auto eval = [rep, x, f](double s, int order) {
      const FirstOrderOp op = generator_coefficients(rep, x, s, order);
      const Jet fj = f.jet(s, order + 1);
      return op.a * fj.truncated(order) + op.b * fj.differentiate();
    };
    return WaveFunction(eval, f.decay(), f.hint(), f.max_order() - 1);
  }
  if (!opt.allow_stencil)
    throw std::domain_error("generator_apply: function has no analytic derivative and the stencil is disabled");
  const double h = 1e-4 * f.hint().width;
  auto eval = [rep, x, f, h](double s) {
    const FirstOrderOp op = generator_coefficients(rep, x, s, 0);
    const cplx d = (f(s - 2 * h) - 8.0 * f(s - h) + 8.0 * f(s + h) - f(s + 2 * h)) / (12.0 * h);
    return op.a.value() * f(s) + op.b.value() * d;
  };
  return WaveFunction::from_values(eval, f.decay(), f.hint());
}

WaveFunction generator_apply(const RepParams& rep, Basis b, const WaveFunction& f, const GeneratorOptions& opt) {
  return generator_apply(rep, AlgebraElement::basis(b), f, opt);
}

double verify_homomorphism(const RepParams& rep, const GroupElement& g2, const GroupElement& g1,
                           const std::vector<WaveFunction>& probes) {
  double worst = 0.0;
  const GroupElement g21 = compose(g2, g1, rep.model);
  for (const auto& f : probes) {
    const WaveFunction lhs = rep_apply(rep, g2, rep_apply(rep, g1, f));
    const WaveFunction rhs = rep_apply(rep, g21, f);
    worst = std::max(worst, distance(lhs, rhs) / norm(f));
  }
  return worst;
}

double verify_unitarity(const RepParams& rep, const GroupElement& g, const std::vector<WaveFunction>& probes) {
  double worst = 0.0;
  std::vector<WaveFunction> moved;
  std::vector<double> norms;
  for (const auto& f : probes) {
    moved.push_back(rep_apply(rep, g, f));
    const double n2 = norm_squared(f);
    norms.push_back(std::sqrt(n2));
    worst = std::max(worst, std::abs(norm_squared(moved.back()) - n2) / n2);
  }
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = i + 1; j < probes.size(); ++j) {
      const cplx before = inner_product(probes[i], probes[j]);
      const cplx after = inner_product(moved[i], moved[j]);
      worst = std::max(worst, std::abs(after - before) / (norms[i] * norms[j]));
    }
  return worst;
}

CommutatorReport verify_commutators(const RepParams& rep, const std::vector<WaveFunction>& probes) {
  CommutatorReport r;
  for (const auto& f : probes) {
    const double nf = norm(f);
    for (int A = 0; A < 4; ++A)
      for (int Bi = A + 1; Bi < 4; ++Bi) {
        const AlgebraElement xa = AlgebraElement::basis(A), xb = AlgebraElement::basis(Bi);
        const WaveFunction ab = generator_apply(rep, xa, generator_apply(rep, xb, f));
        const WaveFunction ba = generator_apply(rep, xb, generator_apply(rep, xa, f));
        const WaveFunction br = generator_apply(rep, bracket(xa, xb, rep.model), f);
        const WaveFunction lhs = linear_combination({1.0, -1.0}, {ab, ba});
        r.commutator = std::max(r.commutator, distance(lhs, br) / nf);
      }
  }
  for (int X = 0; X < 4; ++X) {
    const AlgebraElement x = AlgebraElement::basis(X);
    for (std::size_t i = 0; i < probes.size(); ++i)
      for (std::size_t j = i; j < probes.size(); ++j) {
        const cplx s = inner_product(generator_apply(rep, x, probes[i]), probes[j]) +
                       inner_product(probes[i], generator_apply(rep, x, probes[j]));
        r.anti_hermiticity = std::max(r.anti_hermiticity, std::abs(s) / (norm(probes[i]) * norm(probes[j])));
      }
  }
  return r;
}

double verify_casimir(const RepParams& rep, const std::vector<WaveFunction>& probes) {
  const double B = rep.model.B();
  const auto rho = [&](Basis b, const WaveFunction& f) { return generator_apply(rep, b, f); };
  double worst = 0.0;
  for (const auto& f : probes) {
    const WaveFunction p0p0 = rho(kP0, rho(kP0, f));
    const WaveFunction p1p1 = rho(kP1, rho(kP1, f));
    const WaveFunction ij = rho(kI, rho(kJ, f));
    const WaveFunction ji = rho(kJ, rho(kI, f));
    WaveFunction res = f;
    if (rep.family == OrbitCase::A) {
      // 2B rho(I)rho(J) - sqrt(-h)(rho(P0)^2 - rho(P1)^2 + c2)
      res = linear_combination({2.0 * B, -kSqrtMinusH, kSqrtMinusH, -kSqrtMinusH * rep.c2}, {ij, p0p0, p1p1, f});
    } else {
      const double c2 = casimir_pairing(rep.base_point(), rep.model);
      res = linear_combination({1.0, -1.0, -2.0 * B / kSqrtMinusH, c2}, {p0p0, p1p1, ji, f});
    }
    const WaveFunction zero = linear_combination({0.0}, {f});
    worst = std::max(worst, distance(res, zero) / norm(f));
  }
  return worst;
}

std::vector<double> generator_difference_errors(const RepParams& rep, const AlgebraElement& x, const WaveFunction& f,
                                                const std::vector<double>& steps) {
  const WaveFunction exact = generator_apply(rep, x, f);
  const double nf = norm(f);
  std::vector<double> errs;
  for (double t : steps) {
    const WaveFunction fp = rep_apply(rep, exp_map(x * t, rep.model), f);
    const WaveFunction fm = rep_apply(rep, exp_map(x * (-t), rep.model), f);
    const WaveFunction quotient = linear_combination({0.5 / t, -0.5 / t}, {fp, fm});
    errs.push_back(distance(quotient, exact) / nf);
  }
  return errs;
}

GroupElement section(const RepParams& rep, double x) {
  switch (rep.family) {
    case OrbitCase::A: return {0.0, x, 0.0, 0.0};
    case OrbitCase::B: return GroupElement::identity();
    case OrbitCase::C: return {0.0, 0.0, x, 0.0};
  }
  return {};
}

CosetDecomposition coset_decompose(const RepParams& rep, const GroupElement& g) {
  switch (rep.family) {
    case OrbitCase::A: {
      // h(t, alpha, beta_h) s(x) = (t - sinh(alpha) x, t + cosh(alpha) x, alpha, beta_h - (B/2) t x e^alpha)
      const double x = (g.theta1 - g.theta0) * std::exp(-g.alpha);
      const double t = g.theta1 - std::cosh(g.alpha) * x;
      const double bh = g.beta + 0.5 * rep.model.B() * t * x * std::exp(g.alpha);
      return {{t, t, g.alpha, bh}, x};
    }
    case OrbitCase::B: return {g, 0.0};
    case OrbitCase::C: return {{g.theta0, g.theta1, 0.0, g.beta}, g.alpha};
  }
  return {};
}

cplx induced_lift(const RepParams& rep, const WaveFunction& f, const GroupElement& g) {
  const CosetDecomposition d = coset_decompose(rep, g);
  const cplx fx = f.is_amplitude() ? f.amplitude_value() : f(d.x);
  return character(rep, d.h) * fx / std::sqrt(subgroup_modulus(rep, d.h));
}

namespace {

GroupElement random_subgroup_element(const RepParams& rep, std::mt19937_64& rng, double half_width) {
  GroupElement h = random_group_element(rng, half_width);
  if (rep.family == OrbitCase::A) h.theta1 = h.theta0;
  if (rep.family == OrbitCase::C) h.alpha = 0.0;
  return h;
}

}  // namespace

double verify_induced_condition(const RepParams& rep, const WaveFunction& f, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const GroupElement h = random_subgroup_element(rep, rng, 1.5);
    const GroupElement g = random_group_element(rng, 1.5);
    const cplx lhs = induced_lift(rep, f, compose(h, g, rep.model));
    const cplx rhs = character(rep, h) * induced_lift(rep, f, g) / std::sqrt(subgroup_modulus(rep, h));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double verify_realization(const RepParams& rep, const WaveFunction& f, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-2.0, 2.0);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const GroupElement g = random_group_element(rng, 1.5);
    const double x = ux(rng);
    const WaveFunction tf = rep_apply(rep, g, f);
    const cplx lhs = tf.is_amplitude() ? tf.amplitude_value() : tf(x);
    const cplx rhs = induced_lift(rep, f, compose(section(rep, x), g, rep.model));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

std::vector<GroupElement> faithfulness_test_set() {
  std::vector<GroupElement> set;
  const double vals[] = {-1.0, -0.25, 0.25, 1.0, 2.0};
  for (int c = 0; c < 4; ++c)
    for (double v : vals) {
      GroupElement g;
      Vec4 k = Vec4::Zero();
      k[c] = v;
      g = GroupElement::from_coords(k);
      set.push_back(g);
    }
  return set;
}

double faithfulness_margin(const RepParams& rep, const std::vector<WaveFunction>& probes) {
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& g : faithfulness_test_set()) {
    double best = 0.0;
    for (const auto& f : probes) best = std::max(best, distance(rep_apply(rep, g, f), f) / norm(f));
    margin = std::min(margin, best);
  }
  return margin;
}

std::vector<WaveFunction> carrier_probes(const RepParams& rep) {
  if (rep.family == OrbitCase::B) return {WaveFunction::amplitude(1.0), WaveFunction::amplitude(cplx(0.6, -0.8))};
  return hermite_probes();
}

}  // namespace pext
