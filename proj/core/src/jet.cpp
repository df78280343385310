#include "pext/jet.hpp"

#include <algorithm>

namespace pext {

Jet::Jet(cplx value, int order) : order_(order) {
  if (order < 0 || order > kMaxOrder) throw std::out_of_range("jet order out of range");
  c_[0] = value;
}

Jet Jet::variable(double x0, int order) {
  Jet j(x0, order);
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

cplx Jet::derivative(int k) const {
  if (k > order_) throw std::out_of_range("jet derivative beyond order");
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return c_[k] * f;
}

Jet Jet::truncated(int order) const {
  Jet j = *this;
  j.order_ = std::min(order_, order);
  for (int k = j.order_ + 1; k <= kMaxOrder; ++k) j.c_[k] = 0.0;
  return j;
}

Jet Jet::differentiate() const {
  if (order_ == 0) throw std::logic_error("cannot differentiate an order-0 jet");
  Jet j;
  j.order_ = order_ - 1;
  for (int k = 0; k <= j.order_; ++k) j.c_[k] = c_[k + 1] * static_cast<double>(k + 1);
  return j;
}

Jet Jet::scaled(double s) const {
  Jet j = *this;
  double f = 1.0;
  for (int k = 0; k <= order_; ++k, f *= s) j.c_[k] *= f;
  return j;
}

Jet Jet::operator+(const Jet& o) const {
  Jet j;
  j.order_ = std::min(order_, o.order_);
  for (int k = 0; k <= j.order_; ++k) j.c_[k] = c_[k] + o.c_[k];
  return j;
}

Jet Jet::operator-(const Jet& o) const {
  Jet j;
  j.order_ = std::min(order_, o.order_);
  for (int k = 0; k <= j.order_; ++k) j.c_[k] = c_[k] - o.c_[k];
  return j;
}

Jet Jet::operator*(const Jet& o) const {
  Jet j;
  j.order_ = std::min(order_, o.order_);
  for (int k = 0; k <= j.order_; ++k) {
    cplx s = 0.0;
    for (int i = 0; i <= k; ++i) s += c_[i] * o.c_[k - i];
    j.c_[k] = s;
  }
  return j;
}

Jet Jet::operator*(cplx s) const {
  Jet j = *this;
  for (int k = 0; k <= order_; ++k) j.c_[k] *= s;
  return j;
}

Jet Jet::operator+(cplx s) const {
  Jet j = *this;
  j.c_[0] += s;
  return j;
}

Jet Jet::operator-() const { return *this * cplx(-1.0); }

Jet exp(const Jet& f) {
  // y' = f' y  =>  k y_k = sum_{j=1}^k j f_j y_{k-j}
  Jet y;
  y.order_ = f.order_;
  y.c_[0] = std::exp(f.c_[0]);
  for (int k = 1; k <= f.order_; ++k) {
    cplx s = 0.0;
    for (int j = 1; j <= k; ++j) s += static_cast<double>(j) * f.c_[j] * y.c_[k - j];
    y.c_[k] = s / static_cast<double>(k);
  }
  return y;
}

Jet cosh(const Jet& f) { return (exp(f) + exp(-f)) * cplx(0.5); }

Jet sinh(const Jet& f) { return (exp(f) - exp(-f)) * cplx(0.5); }

}  // namespace pext
