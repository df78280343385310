#include "pext/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pext {

const char* decay_class_name(DecayClass d) {
  switch (d) {
    case DecayClass::GaussianPolynomial: return "gaussian-polynomial";
    case DecayClass::CompactSmooth: return "compact-smooth";
    case DecayClass::Generic: return "generic";
  }
  return "?";
}

WaveFunction::WaveFunction(JetEvaluator eval, DecayClass decay, QuadratureHint hint, int max_order)
    : eval_(std::make_shared<const JetEvaluator>(std::move(eval))), decay_(decay), hint_(hint),
      max_order_(std::clamp(max_order, 0, Jet::kMaxOrder)) {
  if (!(hint.width > 0.0) || !std::isfinite(hint.center) || !std::isfinite(hint.width))
    throw std::invalid_argument("quadrature hint needs finite center and positive width");
}

WaveFunction WaveFunction::from_values(std::function<cplx(double)> f, DecayClass decay, QuadratureHint hint) {
  return WaveFunction([f = std::move(f)](double x, int) { return Jet(f(x), 0); }, decay, hint, 0);
}

WaveFunction WaveFunction::amplitude(cplx a) {
  WaveFunction w;
  w.amplitude_ = true;
  w.amp_ = a;
  w.max_order_ = Jet::kMaxOrder;
  w.decay_ = DecayClass::CompactSmooth;
  return w;
}

cplx WaveFunction::amplitude_value() const {
  if (!amplitude_) throw std::logic_error("wavefunction is not a one-dimensional amplitude");
  return amp_;
}

cplx WaveFunction::operator()(double x) const { return jet(x, 0).value(); }

Jet WaveFunction::jet(double x, int order) const {
  if (amplitude_) throw std::logic_error("amplitude has no pointwise values");
  if (order > max_order_) throw std::domain_error("requested jet order exceeds the analytic order of the function");
  return (*eval_)(x, order);
}

WaveFunction hermite_function(int k, double center, double width) {
  if (k < 0) throw std::invalid_argument("hermite index must be >= 0");
  if (!(width > 0.0)) throw std::invalid_argument("hermite width must be positive");
  double norm = std::pow(std::numbers::pi, -0.25) / std::sqrt(width);
  for (int i = 1; i <= k; ++i) norm /= std::sqrt(2.0 * i);
  auto eval = [k, center, width, norm](double x, int order) {
    // y = (x - center) / width as a jet in x
    const Jet y = Jet::variable((x - center) / width, order).scaled(1.0 / width);
    Jet hm(0.0, order), h(1.0, order);
    for (int n = 0; n < k; ++n) {
      Jet next = y * h * cplx(2.0) - hm * cplx(2.0 * n);
      hm = h;
      h = next;
    }
    return h * exp(y * y * cplx(-0.5)) * cplx(norm);
  };
  return WaveFunction(eval, DecayClass::GaussianPolynomial, {center, width});
}

std::vector<WaveFunction> hermite_probes(int n) {
  std::vector<WaveFunction> probes;
  for (int k = 0; k < n; ++k) probes.push_back(hermite_function(k));
  probes.push_back(linear_combination({cplx(0.6, 0.0), cplx(0.0, 0.8)},
                                      {hermite_function(0, 0.7, 1.3), hermite_function(1, -0.4, 0.8)}));
  return probes;
}

WaveFunction complex_gaussian(cplx a, cplx b, cplx c) {
  if (!(a.real() < 0.0)) throw std::invalid_argument("complex gaussian needs Re a < 0");
  auto eval = [a, b, c](double x, int order) {
    const Jet X = Jet::variable(x, order);
    return exp(X * X * a + X * b + c);
  };
  const double width = 1.0 / std::sqrt(-2.0 * a.real());
  const double center = -b.real() / (2.0 * a.real());
  return WaveFunction(eval, DecayClass::GaussianPolynomial, {center, width});
}

QuadratureHint merge_hints(const QuadratureHint& a, const QuadratureHint& b) {
  const double lo = std::min(a.center - 12.0 * a.width, b.center - 12.0 * b.width);
  const double hi = std::max(a.center + 12.0 * a.width, b.center + 12.0 * b.width);
  return {0.5 * (lo + hi), (hi - lo) / 24.0};
}

WaveFunction linear_combination(const std::vector<cplx>& w, const std::vector<WaveFunction>& f) {
  if (w.size() != f.size() || f.empty()) throw std::invalid_argument("linear_combination: size mismatch");
  if (f.front().is_amplitude()) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += w[i] * f[i].amplitude_value();
    return WaveFunction::amplitude(s);
  }
  QuadratureHint h = f.front().hint();
  int order = f.front().max_order();
  DecayClass decay = f.front().decay();
  for (const auto& fi : f) {
    h = merge_hints(h, fi.hint());
    order = std::min(order, fi.max_order());
    if (fi.decay() != decay) decay = DecayClass::Generic;
  }
  auto eval = [w, f](double x, int ord) {
    Jet s(0.0, ord);
    for (std::size_t i = 0; i < f.size(); ++i) s = s + f[i].jet(x, ord) * w[i];
    return s;
  };
  return WaveFunction(eval, decay, h, order);
}

}  // namespace pext
