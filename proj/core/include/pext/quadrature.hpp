#pragma once

#include "pext/types.hpp"
#include "pext/wavefunction.hpp"

#include <functional>

namespace pext {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-15;
  double l1_floor = 1e-14;  ///< error target never below l1_floor * int |f|
  int initial_panels = 24;
  int max_panels = 4000;
};

struct QuadratureResult {
  cplx value{};
  double error = 0.0;
  int panels = 0;
  bool converged = false;
};

/// Globally adaptive 15/31-point Gauss-Kronrod on [a, b]: the panel with the
/// largest error estimate is bisected until the summed estimate is below
/// max(abs_tol, rel_tol * |value|, l1_floor * int |f|) or the panel budget is
/// exhausted.
QuadratureResult integrate(const std::function<cplx(double)>& f, double a, double b,
                           const QuadratureOptions& opt = {});

/// Integrates over center +- 12 width of the hint.
QuadratureResult integrate(const std::function<cplx(double)>& f, const QuadratureHint& hint,
                           const QuadratureOptions& opt = {});

/// <f, g> = int conj(f) g.  Amplitudes use conj(a) b.
cplx inner_product(const WaveFunction& f, const WaveFunction& g, const QuadratureOptions& opt = {});
double norm_squared(const WaveFunction& f, const QuadratureOptions& opt = {});
double norm(const WaveFunction& f, const QuadratureOptions& opt = {});
/// || f - g ||, integrated directly so that small distances keep full relative accuracy.
double distance(const WaveFunction& f, const WaveFunction& g, const QuadratureOptions& opt = {});

}  // namespace pext
