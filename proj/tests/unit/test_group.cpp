#include "pext/conventions.hpp"
#include "pext/group.hpp"

#include <doctest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>

using namespace pext;

namespace {

using Mat3 = Eigen::Matrix3d;

// Faithful 3x3 representation: P+ -> E12, P- -> E23, J -> E22, I -> E13 / 2B,
// with P0 = (P+ + P-) / 2 and P1 = (P+ - P-) / 2.
Mat3 rho(const AlgebraElement& x, const ModelParams& p) {
  Mat3 m = Mat3::Zero();
  m(0, 1) = (x[kP0] + x[kP1]) / 2.0;
  m(1, 2) = (x[kP0] - x[kP1]) / 2.0;
  m(1, 1) = x[kJ];
  m(0, 2) = x[kI] / (2.0 * p.B());
  return m;
}

Mat3 matrix_of(const GroupElement& g, const ModelParams& p) {
  const Mat3 a = rho(AlgebraElement(g.theta0, g.theta1, 0, 0), p).exp();
  const Mat3 b = rho(AlgebraElement(0, 0, g.alpha, 0), p).exp();
  const Mat3 c = rho(AlgebraElement(0, 0, 0, g.beta), p).exp();
  return a * b * c;
}

double coord_distance(const GroupElement& a, const GroupElement& b) { return (a.coords() - b.coords()).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("matrix oracle realizes the brackets") {
    const ModelParams p(1.7, 1.0);
    for (int A = 0; A < 4; ++A)
      for (int B = 0; B < 4; ++B) {
        const auto x = AlgebraElement::basis(A), y = AlgebraElement::basis(B);
        const Mat3 lhs = rho(x, p) * rho(y, p) - rho(y, p) * rho(x, p);
        CHECK((lhs - rho(bracket(x, y, p), p)).norm() < 1e-15);
      }
  }

  TEST_CASE("basis brackets") {
    const ModelParams p(2.0, 1.0);
    const auto P0 = AlgebraElement::basis(kP0), P1 = AlgebraElement::basis(kP1), J = AlgebraElement::basis(kJ);
    CHECK(bracket(P0, J, p).coeffs().isApprox(Vec4(0, 1, 0, 0)));
    CHECK(bracket(P1, J, p).coeffs().isApprox(Vec4(1, 0, 0, 0)));
    CHECK(bracket(P0, P1, p).coeffs().isApprox(Vec4(0, 0, 0, -2)));
  }

  TEST_CASE("composition and inverse agree with matrix products") {
    for (const ModelParams p : {ModelParams(1.0, 1.0), ModelParams(-2.5, 0.3)}) {
      std::mt19937_64 rng(7);
      for (int i = 0; i < 50; ++i) {
        const GroupElement g1 = random_group_element(rng, 2.0), g2 = random_group_element(rng, 2.0);
        const Mat3 expected = matrix_of(g2, p) * matrix_of(g1, p);
        CHECK((matrix_of(compose(g2, g1, p), p) - expected).norm() < 1e-11 * (1.0 + expected.norm()));
        CHECK(coord_distance(compose(g1, inverse(g1, p), p), GroupElement::identity()) < 1e-12);
      }
    }
  }

  TEST_CASE("composition is associative") {
    const ModelParams p(1.3, 1.0);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
      const auto a = random_group_element(rng, 1.5), b = random_group_element(rng, 1.5), c = random_group_element(rng, 1.5);
      CHECK(coord_distance(compose(compose(a, b, p), c, p), compose(a, compose(b, c, p), p)) < 1e-12);
    }
  }

  TEST_CASE("exp_map matches the matrix exponential") {
    const ModelParams p(-1.4, 1.0);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
      const AlgebraElement x = random_algebra_element(rng, 2.0);
      const Mat3 expected = rho(x, p).exp();
      CHECK((matrix_of(exp_map(x, p), p) - expected).norm() < 1e-11 * (1.0 + expected.norm()));
    }
  }

  TEST_CASE("log_map inverts exp_map") {
    const ModelParams p(1.0, 1.0);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
      const AlgebraElement x = random_algebra_element(rng, 1.5);
      const AlgebraElement y = log_map(exp_map(x, p), p);
      CHECK((x.coeffs() - y.coeffs()).cwiseAbs().maxCoeff() < 1e-10);
    }
  }

  TEST_CASE("adjoint matrix is conjugation in the matrix oracle") {
    const ModelParams p(0.8, 1.0);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
      const GroupElement g = random_group_element(rng, 2.0);
      const Mat3 G = matrix_of(g, p), Gi = G.inverse();
      const Mat4 ad = adjoint_matrix(g, p);
      for (int B = 0; B < 4; ++B) {
        const Mat3 expected = G * rho(AlgebraElement::basis(B), p) * Gi;
        const Mat3 got = rho(AlgebraElement(Vec4(ad.col(B))), p);
        CHECK((got - expected).norm() < 1e-11 * (1.0 + expected.norm()));
      }
    }
  }

  TEST_CASE("Ad(exp X) = exp(ad X)") {
    const ModelParams p(1.0, 1.0);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
      const AlgebraElement x = random_algebra_element(rng, 1.5);
      const Mat4 expected = ad_matrix(x, p).exp();
      CHECK((adjoint_matrix(exp_map(x, p), p) - expected).norm() < 1e-10 * expected.norm());
    }
  }

  TEST_CASE("coadjoint action preserves the Casimir and u3") {
    const ModelParams p(2.0, 1.0);
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> U(-2, 2);
    for (int i = 0; i < 100; ++i) {
      const CoadjointPoint zeta(U(rng), U(rng), U(rng), U(rng));
      const GroupElement g = random_group_element(rng, 1.0);
      const CoadjointPoint u = coadjoint_action(g, zeta, p);
      CHECK(u[kI] == zeta[kI]);
      CHECK(std::abs(casimir_pairing(u, p) - casimir_pairing(zeta, p)) < 1e-12 * (1 + std::abs(casimir_pairing(zeta, p))));
      // <Ad*(g) zeta, Ad(g) X> = <zeta, X>
      const AlgebraElement x = random_algebra_element(rng, 1.0);
      const double lhs = u.pair(AlgebraElement(Vec4(adjoint_matrix(g, p) * x.coeffs())));
      CHECK(lhs == doctest::Approx(zeta.pair(x)).epsilon(1e-12));
    }
  }

  TEST_CASE("Casimir pairing formula") {
    const ModelParams p(3.0, 1.0);
    const CoadjointPoint u(1.0, 2.0, 0.5, -1.0);
    CHECK(casimir_pairing(u, p) == doctest::Approx(1.0 - 4.0 + 3.0));
  }

  TEST_CASE("structural report") {
    const auto s = structural_report(ModelParams(1.0, 1.0), 200, 1);
    CHECK(s.central_series.back() == 3);
    CHECK(s.derived_series.back() == 0);
    CHECK(s.solvable());
    CHECK_FALSE(s.nilpotent());
    CHECK(s.max_imag_eigenvalue <= 1e-10);
    CHECK(s.max_abs_trace <= 1e-12);
    CHECK(s.has_nonzero_real_eigenvalue);
  }

  TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(ModelParams(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraElement(std::nan(""), 0, 0, 0), std::invalid_argument);
  }
}
