#pragma once

#include "pext/types.hpp"

#include <array>

namespace pext {

/// Truncated Taylor expansion f(x0 + h) = sum_{k <= order} c_k h^k with
/// complex coefficients.  Binary operations truncate to the smaller order.
class Jet {
 public:
  static constexpr int kMaxOrder = 8;

  Jet() = default;
  /// Constant jet of the given order.
  Jet(cplx value, int order);

  /// The independent variable x0 + h.
  static Jet variable(double x0, int order);

  int order() const noexcept { return order_; }
  cplx operator[](int k) const { return c_[k]; }
  cplx& operator[](int k) { return c_[k]; }

  cplx value() const { return c_[0]; }
  /// k-th derivative at x0 (k! c_k).
  cplx derivative(int k) const;

  Jet truncated(int order) const;

  /// d/dh, lowering the order by one.
  Jet differentiate() const;

  /// Jet of h -> f(y0 + s h) from the jet of f at y0.
  Jet scaled(double s) const;

  Jet operator+(const Jet& o) const;
  Jet operator-(const Jet& o) const;
  Jet operator*(const Jet& o) const;
  Jet operator*(cplx s) const;
  Jet operator+(cplx s) const;
  Jet operator-() const;
  friend Jet operator*(cplx s, const Jet& j) { return j * s; }

  friend Jet exp(const Jet& j);
  friend Jet cosh(const Jet& j);
  friend Jet sinh(const Jet& j);

 private:
  std::array<cplx, kMaxOrder + 1> c_{};
  int order_ = 0;
};

}  // namespace pext
