#pragma once

#include "pext/jet.hpp"
#include "pext/types.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace pext {

enum class DecayClass { GaussianPolynomial, CompactSmooth, Generic };

const char* decay_class_name(DecayClass d);

/// Region carrying the mass of a function: center +- 12 width is integrated.
struct QuadratureHint {
  double center = 0.0;
  double width = 1.0;
};

/// Evaluates the Taylor jet of order <= `order` at x.
using JetEvaluator = std::function<Jet(double x, int order)>;

/// Immutable complex function on the real line, or a single complex amplitude
/// for one-dimensional carrier spaces.  Copies share the evaluator.
class WaveFunction {
 public:
  /// Analytic function: `max_order` is the highest jet order the evaluator
  /// can produce exactly (Jet::kMaxOrder for closed-form closures).
  WaveFunction(JetEvaluator eval, DecayClass decay, QuadratureHint hint, int max_order = Jet::kMaxOrder);

  /// Pointwise samples only; derivatives need a finite-difference stencil.
  static WaveFunction from_values(std::function<cplx(double)> f, DecayClass decay, QuadratureHint hint);

  /// Element of a one-dimensional Hilbert space.
  static WaveFunction amplitude(cplx a);

  bool is_amplitude() const noexcept { return amplitude_; }
  cplx amplitude_value() const;

  cplx operator()(double x) const;
  Jet jet(double x, int order) const;

  int max_order() const noexcept { return max_order_; }
  DecayClass decay() const noexcept { return decay_; }
  const QuadratureHint& hint() const noexcept { return hint_; }

 private:
  WaveFunction() = default;
  std::shared_ptr<const JetEvaluator> eval_;
  DecayClass decay_ = DecayClass::Generic;
  QuadratureHint hint_{};
  int max_order_ = 0;
  bool amplitude_ = false;
  cplx amp_{};
};

/// Normalized Hermite function h_k((x - center) / width) / sqrt(width).
WaveFunction hermite_function(int k, double center = 0.0, double width = 1.0);

/// h_0 .. h_{n-1} at unit width, plus mixed probes with shifted centers and
/// complex combinations, all Gaussian-weighted polynomials.
std::vector<WaveFunction> hermite_probes(int n = 5);

/// exp(a x^2 + b x + c) with Re a < 0.
WaveFunction complex_gaussian(cplx a, cplx b, cplx c);

/// sum_i w_i f_i (hints merged to cover all terms).
WaveFunction linear_combination(const std::vector<cplx>& w, const std::vector<WaveFunction>& f);

/// Smallest hint covering both.
QuadratureHint merge_hints(const QuadratureHint& a, const QuadratureHint& b);

}  // namespace pext
