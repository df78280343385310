#include "pext/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace pext {

PolynomialObservable PolynomialObservable::constant(double c) { return monomial(0, 0, c); }
PolynomialObservable PolynomialObservable::q() { return monomial(1, 0); }
PolynomialObservable PolynomialObservable::p() { return monomial(0, 1); }

PolynomialObservable PolynomialObservable::monomial(int i, int j, double c) {
  PolynomialObservable f;
  f.set(i, j, c);
  return f;
}

double PolynomialObservable::coeff(int i, int j) const {
  const auto it = c_.find({i, j});
  return it == c_.end() ? 0.0 : it->second;
}

void PolynomialObservable::set(int i, int j, double c) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative monomial power");
  if (!std::isfinite(c)) throw std::invalid_argument("non-finite polynomial coefficient");
  if (c == 0.0)
    c_.erase({i, j});
  else
    c_[{i, j}] = c;
}

void PolynomialObservable::prune() {
  for (auto it = c_.begin(); it != c_.end();) it = it->second == 0.0 ? c_.erase(it) : std::next(it);
}

int PolynomialObservable::degree() const {
  int d = -1;
  for (const auto& [m, c] : c_) d = std::max(d, m.first + m.second);
  return d;
}

double PolynomialObservable::operator()(double qv, double pv) const {
  double s = 0.0;
  for (const auto& [m, c] : c_) s += c * std::pow(qv, m.first) * std::pow(pv, m.second);
  return s;
}

PolynomialObservable PolynomialObservable::d_dq() const {
  PolynomialObservable f;
  for (const auto& [m, c] : c_)
    if (m.first > 0) f.c_[{m.first - 1, m.second}] += c * m.first;
  f.prune();
  return f;
}

PolynomialObservable PolynomialObservable::d_dp() const {
  PolynomialObservable f;
  for (const auto& [m, c] : c_)
    if (m.second > 0) f.c_[{m.first, m.second - 1}] += c * m.second;
  f.prune();
  return f;
}

PolynomialObservable PolynomialObservable::compose_affine(double a00, double a01, double b0, double a10, double a11,
                                                          double b1) const {
  PolynomialObservable qn, pn;
  qn.set(1, 0, a00);
  qn.set(0, 1, a01);
  qn.set(0, 0, b0);
  pn.set(1, 0, a10);
  pn.set(0, 1, a11);
  pn.set(0, 0, b1);
  PolynomialObservable out;
  for (const auto& [m, c] : c_) {
    PolynomialObservable t = constant(c);
    for (int k = 0; k < m.first; ++k) t = t * qn;
    for (int k = 0; k < m.second; ++k) t = t * pn;
    out = out + t;
  }
  return out;
}

PolynomialObservable PolynomialObservable::operator+(const PolynomialObservable& o) const {
  PolynomialObservable f = *this;
  for (const auto& [m, c] : o.c_) f.c_[m] += c;
  f.prune();
  return f;
}

PolynomialObservable PolynomialObservable::operator-(const PolynomialObservable& o) const { return *this + o * -1.0; }

PolynomialObservable PolynomialObservable::operator*(const PolynomialObservable& o) const {
  PolynomialObservable f;
  for (const auto& [m1, c1] : c_)
    for (const auto& [m2, c2] : o.c_) f.c_[{m1.first + m2.first, m1.second + m2.second}] += c1 * c2;
  f.prune();
  return f;
}

PolynomialObservable PolynomialObservable::operator*(double s) const {
  PolynomialObservable f;
  for (const auto& [m, c] : c_) f.c_[m] = c * s;
  f.prune();
  return f;
}

double PolynomialObservable::distance(const PolynomialObservable& o) const {
  double d = 0.0;
  for (const auto& [m, c] : (*this - o).c_) d = std::max(d, std::abs(c));
  return d;
}

std::string PolynomialObservable::to_string() const {
  if (c_.empty()) return "0";
  // highest degree first, then higher power of q first
  std::vector<std::pair<Monomial, double>> t(c_.begin(), c_.end());
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [m, c] : t) {
    const bool unit = std::abs(c) == 1.0 && (m.first + m.second) > 0;
    out += c < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + ");
    if (!unit) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", std::abs(c));
      out += buf;
    }
    auto factor = [&](char v, int k) {
      if (k == 0) return;
      out += v;
      if (k > 1) out += "^" + std::to_string(k);
    };
    factor('q', m.first);
    factor('p', m.second);
  }
  return out;
}

PolynomialObservable PolynomialObservable::parse(const std::string& text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial \"" + text + "\": " + why);
  };
  PolynomialObservable out;
  skip();
  if (i == n) fail("empty expression");
  bool first = true;
  while (true) {
    skip();
    if (i == n) break;
    double sign = 1.0;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1.0 : 1.0;
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-' at position " + std::to_string(i));
    }
    first = false;
    double coef = 1.0;
    bool have_coef = false;
    if (i < n && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.')) {
      std::size_t used = 0;
      try {
        coef = std::stod(text.substr(i), &used);
      } catch (const std::exception&) {
        fail("bad number at position " + std::to_string(i));
      }
      i += used;
      have_coef = true;
    }
    int qi = 0, pj = 0;
    bool have_factor = false;
    while (true) {
      skip();
      if (i < n && text[i] == '*') {
        ++i;
        skip();
      }
      if (i >= n || (text[i] != 'q' && text[i] != 'p')) break;
      const char v = text[i++];
      int power = 1;
      skip();
      if (i < n && text[i] == '^') {
        ++i;
        skip();
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) fail("expected integer exponent");
        power = std::stoi(text.substr(start, i - start));
      }
      (v == 'q' ? qi : pj) += power;
      have_factor = true;
    }
    if (!have_coef && !have_factor) fail("expected a term at position " + std::to_string(i));
    out.c_[{qi, pj}] += sign * coef;
    skip();
    if (i < n && text[i] != '+' && text[i] != '-') fail("unexpected character '" + std::string(1, text[i]) + "'");
  }
  out.prune();
  return out;
}

}  // namespace pext
