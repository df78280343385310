#pragma once

#include <map>
#include <string>
#include <utility>

namespace pext {

/// Real polynomial sum c_ij q^i p^j on the reduced phase space.
class PolynomialObservable {
 public:
  using Monomial = std::pair<int, int>;  ///< (power of q, power of p)

  PolynomialObservable() = default;
  static PolynomialObservable constant(double c);
  static PolynomialObservable q();
  static PolynomialObservable p();
  static PolynomialObservable monomial(int i, int j, double c = 1.0);

  /// Parses expressions such as "q^2 + 2qp", "-0.5*q*p^2 + 1", "3 p q".
  /// Throws std::invalid_argument on malformed input.
  static PolynomialObservable parse(const std::string& text);

  double coeff(int i, int j) const;
  void set(int i, int j, double c);
  const std::map<Monomial, double>& terms() const noexcept { return c_; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool in_p2() const { return degree() <= 2; }

  double operator()(double qv, double pv) const;

  PolynomialObservable d_dq() const;
  PolynomialObservable d_dp() const;

  /// f(a00 q + a01 p + b0, a10 q + a11 p + b1)
  PolynomialObservable compose_affine(double a00, double a01, double b0, double a10, double a11, double b1) const;

  PolynomialObservable operator+(const PolynomialObservable& o) const;
  PolynomialObservable operator-(const PolynomialObservable& o) const;
  PolynomialObservable operator*(const PolynomialObservable& o) const;
  PolynomialObservable operator*(double s) const;
  friend PolynomialObservable operator*(double s, const PolynomialObservable& f) { return f * s; }

  /// Max coefficient difference.
  double distance(const PolynomialObservable& o) const;
  bool operator==(const PolynomialObservable& o) const { return c_ == o.c_; }

  std::string to_string() const;

 private:
  void prune();
  std::map<Monomial, double> c_;
};

}  // namespace pext
