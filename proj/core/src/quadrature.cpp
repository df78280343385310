#include "pext/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <queue>
#include <vector>

namespace pext {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Panel {
  double a, b;
  cplx value;
  double error;
  double l1;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel make_panel(const std::function<cplx(double)>& f, double a, double b) {
  double err = 0.0, l1 = 0.0;
  const cplx v = GK::integrate(f, a, b, 0, 0.0, &err, &l1);
  return {a, b, v, err, l1};
}

}  // namespace

QuadratureResult integrate(const std::function<cplx(double)>& f, double a, double b, const QuadratureOptions& opt) {
  if (!(b > a)) return {};
  std::priority_queue<Panel> heap;
  cplx total = 0.0;
  double err = 0.0, l1 = 0.0;
  const int n0 = std::max(1, opt.initial_panels);
  for (int i = 0; i < n0; ++i) {
    const Panel p = make_panel(f, a + (b - a) * i / n0, a + (b - a) * (i + 1) / n0);
    total += p.value;
    err += p.error;
    l1 += p.l1;
    heap.push(p);
  }
  int panels = n0;
  auto target = [&] { return std::max({opt.abs_tol, opt.rel_tol * std::abs(total), opt.l1_floor * l1}); };
  while (err > target() && panels < opt.max_panels) {
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel l = make_panel(f, worst.a, mid), r = make_panel(f, mid, worst.b);
    total += l.value + r.value - worst.value;
    err += l.error + r.error - worst.error;
    l1 += l.l1 + r.l1 - worst.l1;
    heap.push(l);
    heap.push(r);
    ++panels;
  }
  // re-sum to shed the drift of incremental updates
  total = 0.0;
  err = 0.0;
  l1 = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    l1 += heap.top().l1;
    heap.pop();
  }
  return {total, err, panels, err <= target()};
}

QuadratureResult integrate(const std::function<cplx(double)>& f, const QuadratureHint& hint,
                           const QuadratureOptions& opt) {
  return integrate(f, hint.center - 12.0 * hint.width, hint.center + 12.0 * hint.width, opt);
}

cplx inner_product(const WaveFunction& f, const WaveFunction& g, const QuadratureOptions& opt) {
  if (f.is_amplitude() != g.is_amplitude()) throw std::invalid_argument("inner product of mismatched carriers");
  if (f.is_amplitude()) return std::conj(f.amplitude_value()) * g.amplitude_value();
  return integrate([&](double x) { return std::conj(f(x)) * g(x); }, merge_hints(f.hint(), g.hint()), opt).value;
}

double norm_squared(const WaveFunction& f, const QuadratureOptions& opt) {
  if (f.is_amplitude()) return std::norm(f.amplitude_value());
  return integrate([&](double x) { return cplx(std::norm(f(x))); }, f.hint(), opt).value.real();
}

double norm(const WaveFunction& f, const QuadratureOptions& opt) { return std::sqrt(norm_squared(f, opt)); }

double distance(const WaveFunction& f, const WaveFunction& g, const QuadratureOptions& opt) {
  if (f.is_amplitude() != g.is_amplitude()) throw std::invalid_argument("distance of mismatched carriers");
  if (f.is_amplitude()) return std::abs(f.amplitude_value() - g.amplitude_value());
  const auto r =
      integrate([&](double x) { return cplx(std::norm(f(x) - g(x))); }, merge_hints(f.hint(), g.hint()), opt);
  return std::sqrt(std::max(0.0, r.value.real()));
}

}  // namespace pext
