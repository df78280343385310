#include "pext/cohomology.hpp"

#include "pext/conventions.hpp"
#include "pext/group.hpp"

#include <Eigen/SVD>
#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace pext {

using Rational = boost::multiprecision::cpp_rational;

StructureConstants::StructureConstants(std::string name, std::vector<std::string> basis_names)
    : name_(std::move(name)), n_(static_cast<int>(basis_names.size())), names_(std::move(basis_names)),
      c_(static_cast<std::size_t>(n_ * n_ * n_), 0.0) {
  if (n_ < 1) throw std::invalid_argument("algebra dimension must be >= 1");
}

void StructureConstants::set_bracket(int A, int B, const std::vector<double>& coeffs) {
  if (A < 0 || B < 0 || A >= n_ || B >= n_) throw std::out_of_range("bracket index out of range");
  if (static_cast<int>(coeffs.size()) != n_) throw std::invalid_argument("bracket coefficient count != dim");
  if (A == B) {
    for (double v : coeffs)
      if (v != 0.0) throw std::invalid_argument("[T_A, T_A] must vanish");
    return;
  }
  for (int C = 0; C < n_; ++C) {
    if (!std::isfinite(coeffs[C])) throw std::invalid_argument("non-finite structure constant");
    c_[(C * n_ + A) * n_ + B] = coeffs[C];
    c_[(C * n_ + B) * n_ + A] = -coeffs[C];
  }
}

double StructureConstants::antisymmetry_defect() const {
  double d = 0.0;
  for (int C = 0; C < n_; ++C)
    for (int A = 0; A < n_; ++A)
      for (int B = 0; B < n_; ++B) d = std::max(d, std::abs((*this)(C, A, B) + (*this)(C, B, A)));
  return d;
}

double StructureConstants::jacobi_defect() const {
  // sum_D c^D_{BC} c^E_{AD} + cyclic
  double d = 0.0;
  for (int A = 0; A < n_; ++A)
    for (int B = 0; B < n_; ++B)
      for (int C = 0; C < n_; ++C)
        for (int E = 0; E < n_; ++E) {
          double s = 0.0;
          for (int D = 0; D < n_; ++D)
            s += (*this)(D, B, C) * (*this)(E, A, D) + (*this)(D, C, A) * (*this)(E, B, D) +
                 (*this)(D, A, B) * (*this)(E, C, D);
          d = std::max(d, std::abs(s));
        }
  return d;
}

void StructureConstants::validate() const {
  double scale = 1.0;
  for (double v : c_) scale = std::max(scale, std::abs(v));
  if (antisymmetry_defect() > 0.0) throw std::invalid_argument(name_ + ": structure constants not antisymmetric");
  if (jacobi_defect() > 1e-12 * scale * scale) throw std::invalid_argument(name_ + ": Jacobi identity fails");
}

bool StructureConstants::is_rational() const {
  return std::all_of(c_.begin(), c_.end(), [](double v) { return std::isfinite(v); });
}

int StructureConstants::abelianization_dim() const {
  Eigen::MatrixXd span(n_, n_ * n_);
  for (int A = 0; A < n_; ++A)
    for (int B = 0; B < n_; ++B)
      for (int C = 0; C < n_; ++C) span(C, A * n_ + B) = (*this)(C, A, B);
  return n_ - numeric_rank(span);
}

namespace catalog {

StructureConstants extended_poincare(const ModelParams& p) {
  StructureConstants sc("i12", {"P0", "P1", "J", "I"});
  const auto c = structure_tensor(p);
  for (int A = 0; A < 4; ++A)
    for (int B = A + 1; B < 4; ++B) sc.set_bracket(A, B, {c[0][A][B], c[1][A][B], c[2][A][B], c[3][A][B]});
  return sc;
}

StructureConstants poincare_11() {
  StructureConstants sc("p11", {"P0", "P1", "J"});
  for (int a = 0; a < 2; ++a) {
    std::vector<double> v(3, 0.0);
    for (int b = 0; b < 2; ++b) v[b] = conv::kSqrtMinusH * conv::eps_down_up(a, b);
    sc.set_bracket(a, 2, v);
  }
  return sc;
}

StructureConstants so21() {
  // sl(2,R) basis: [H,E] = 2E, [H,F] = -2F, [E,F] = H
  StructureConstants sc("so21", {"H", "E", "F"});
  sc.set_bracket(0, 1, {0, 2, 0});
  sc.set_bracket(0, 2, {0, 0, -2});
  sc.set_bracket(1, 2, {1, 0, 0});
  return sc;
}

StructureConstants weyl_heisenberg(double B) {
  StructureConstants sc("wh", {"P0", "P1", "I"});
  sc.set_bracket(0, 1, {0, 0, B * conv::eps_lower(0, 1)});
  return sc;
}

StructureConstants abelian(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("X" + std::to_string(i));
  return StructureConstants("abelian" + std::to_string(n), names);
}

StructureConstants by_name(const std::string& name, const ModelParams& p) {
  if (name == "i12") return extended_poincare(p);
  if (name == "p11") return poincare_11();
  if (name == "so21") return so21();
  if (name == "wh") return weyl_heisenberg(p.B());
  if (name.rfind("abelian", 0) == 0 && name.size() > 7) {
    const int n = std::stoi(name.substr(7));
    if (n >= 1 && n <= 12) return abelian(n);
  }
  throw std::invalid_argument("unknown algebra name: " + name);
}

std::vector<std::string> names() { return {"i12", "p11", "so21", "wh", "abelian<n>"}; }

}  // namespace catalog

StructureConstants algebra_from_json(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("algebra file: ") + e.what());
  }
  if (!j.contains("dim") || !j.contains("basis_names") || !j.contains("brackets"))
    throw std::invalid_argument("algebra file: requires dim, basis_names and brackets");
  const int n = j.at("dim").get<int>();
  auto names = j.at("basis_names").get<std::vector<std::string>>();
  if (static_cast<int>(names.size()) != n) throw std::invalid_argument("algebra file: basis_names size != dim");
  StructureConstants sc(j.value("name", std::string("custom")), names);
  auto index_of = [&](const json& v) -> int {
    if (v.is_number_integer()) return v.get<int>();
    const auto s = v.get<std::string>();
    const auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw std::invalid_argument("algebra file: unknown basis name " + s);
    return static_cast<int>(it - names.begin());
  };
  for (const auto& t : j.at("brackets")) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("algebra file: bracket entries are [A, B, coeffs]");
    sc.set_bracket(index_of(t[0]), index_of(t[1]), t[2].get<std::vector<double>>());
  }
  sc.validate();
  return sc;
}

StructureConstants load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return algebra_from_json(ss.str());
}

std::string algebra_to_json(const StructureConstants& sc) {
  using nlohmann::json;
  json j;
  j["name"] = sc.name();
  j["dim"] = sc.dim();
  j["basis_names"] = sc.basis_names();
  json br = json::array();
  for (int A = 0; A < sc.dim(); ++A)
    for (int B = A + 1; B < sc.dim(); ++B) {
      std::vector<double> v(sc.dim());
      bool nz = false;
      for (int C = 0; C < sc.dim(); ++C) {
        v[C] = sc(C, A, B);
        nz = nz || v[C] != 0.0;
      }
      if (nz) br.push_back(json::array({sc.basis_names()[A], sc.basis_names()[B], v}));
    }
  j["brackets"] = br;
  return j.dump(2);
}

CochainSpace cochain_space(int n, int k) {
  CochainSpace s;
  s.degree = k;
  if (k < 0 || k > n) return s;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    s.basis.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return s;
}

namespace {

/// Sign of the permutation sorting `v` (entries distinct), or 0 if repeated.
int sort_sign(std::vector<int> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] == v[j + 1]) return 0;
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
    }
  return sign;
}

template <class Scalar, class Convert>
std::vector<std::vector<Scalar>> differential_entries(int k, const StructureConstants& sc, Convert conv) {
  const int n = sc.dim();
  if (k < 0 || k > n) throw std::out_of_range("ce_differential: degree out of range");
  const auto src = cochain_space(n, k);
  const auto dst = cochain_space(n, k + 1);
  std::vector<std::vector<Scalar>> m(dst.dim(), std::vector<Scalar>(src.dim(), Scalar(0)));
  for (int r = 0; r < dst.dim(); ++r) {
    const auto& J = dst.basis[r];
    for (int i = 0; i < k + 1; ++i)
      for (int j = i + 1; j < k + 1; ++j) {
        std::vector<int> rest;
        for (int l = 0; l < k + 1; ++l)
          if (l != i && l != j) rest.push_back(J[l]);
        const int ij_sign = ((i + j) % 2 == 0) ? 1 : -1;
        for (int C = 0; C < n; ++C) {
          const double c = sc(C, J[i], J[j]);
          if (c == 0.0) continue;
          std::vector<int> args{C};
          args.insert(args.end(), rest.begin(), rest.end());
          const int s = sort_sign(args);
          if (s == 0) continue;
          std::sort(args.begin(), args.end());
          const auto it = std::lower_bound(src.basis.begin(), src.basis.end(), args);
          const int col = static_cast<int>(it - src.basis.begin());
          m[r][col] += Scalar(ij_sign * s) * conv(c);
        }
      }
  }
  return m;
}

int exact_rank(std::vector<std::vector<Rational>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

Rational to_rational(double v) { return Rational(v); }

}  // namespace

Eigen::MatrixXd ce_differential(int k, const StructureConstants& sc) {
  const auto e = differential_entries<double>(k, sc, [](double v) { return v; });
  const int rows = static_cast<int>(e.size());
  const int cols = static_cast<int>(cochain_space(sc.dim(), k).dim());
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = e[r][c];
  return m;
}

int numeric_rank(const Eigen::MatrixXd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s[i] > 1e-9 * s[0]) ++r;
  return r;
}

int exact_differential_rank(int k, const StructureConstants& sc) {
  return exact_rank(differential_entries<Rational>(k, sc, to_rational));
}

bool exact_dd_vanishes(int k, const StructureConstants& sc) {
  const int n = sc.dim();
  if (k < 0 || k + 1 > n) return true;
  const auto d0 = differential_entries<Rational>(k, sc, to_rational);
  const auto d1 = differential_entries<Rational>(k + 1, sc, to_rational);
  for (std::size_t r = 0; r < d1.size(); ++r)
    for (std::size_t c = 0; c < (d0.empty() ? 0 : d0[0].size()); ++c) {
      Rational s = 0;
      for (std::size_t m = 0; m < d0.size(); ++m) s += d1[r][m] * d0[m][c];
      if (s != 0) return false;
    }
  return true;
}

namespace {

int checked_rank(int k, const StructureConstants& sc) {
  if (k < 0 || k > sc.dim()) return 0;
  const int fr = numeric_rank(ce_differential(k, sc));
  if (sc.is_rational()) {
    const int er = exact_differential_rank(k, sc);
    if (er != fr)
      throw RankMismatch(sc.name() + ": rank of d_" + std::to_string(k) + " is " + std::to_string(fr) +
                         " in floating point but " + std::to_string(er) + " exactly");
  }
  return fr;
}

}  // namespace

int cohomology_dim(int k, const StructureConstants& sc) {
  const int n = sc.dim();
  if (k < 0 || k > n) throw std::out_of_range("cohomology_dim: degree out of range");
  const int dim_k = cochain_space(n, k).dim();
  return dim_k - checked_rank(k, sc) - checked_rank(k - 1, sc);
}

std::vector<int> betti_numbers(const StructureConstants& sc) {
  std::vector<int> b;
  for (int k = 0; k <= sc.dim(); ++k) b.push_back(cohomology_dim(k, sc));
  return b;
}

}  // namespace pext
