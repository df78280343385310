#include "pext/group.hpp"
#include "pext/orbits.hpp"

#include <Eigen/LU>
#include <doctest.h>

#include <random>

using namespace pext;

namespace {

/// d/dt Ad*(exp tX) zeta at t = 0 by a central difference.
Vec4 tangent(const CoadjointPoint& zeta, const AlgebraElement& x, const ModelParams& p) {
  const double h = 1e-5;
  const Vec4 up = coadjoint_action(exp_map(x * h, p), zeta, p).coeffs();
  const Vec4 dn = coadjoint_action(exp_map(x * -h, p), zeta, p).coeffs();
  return (up - dn) / (2 * h);
}

}  // namespace

TEST_SUITE("orbits") {
  const ModelParams p(1.0, 1.0);

  TEST_CASE("classification of representative points") {
    const auto a = classify(CoadjointPoint(0, 0, 0.5, -1), p);
    CHECK(a.tag == OrbitCase::A);
    CHECK(a.casimir == doctest::Approx(1.0));
    CHECK(a.z3 == -1.0);
    const auto b = classify(CoadjointPoint(0, 0, 5, 0), p);
    CHECK(b.tag == OrbitCase::B);
    CHECK(b.z2 == 5.0);
    CHECK(classify(CoadjointPoint(0, 0, 0, 0), p).tag == OrbitCase::B);
    const std::pair<Vec2, int> families[] = {{{0.7, 0.3}, 1},   {{-0.7, -0.3}, 2}, {{0.3, -0.7}, 4},
                                             {{-0.3, 0.7}, 3},  {{0.5, -0.5}, 5},  {{-0.5, 0.5}, 6},
                                             {{0.5, 0.5}, 7},   {{-0.5, -0.5}, 8}};
    for (const auto& [z, fam] : families) {
      const auto c = classify(CoadjointPoint(z[0], z[1], 0, 0), p);
      CHECK(c.tag == OrbitCase::C);
      CHECK(c.family == fam);
    }
    CHECK(std::string(orbit_case_name(OrbitCase::A)) == "CaseA");
  }

  TEST_CASE("orbit dimensions") {
    CHECK(orbit_dimension(CoadjointPoint(0.3, -1, 2, 0.4), p) == 2);
    CHECK(orbit_dimension(CoadjointPoint(0, 0, 5, 0), p) == 0);
    CHECK(orbit_dimension(CoadjointPoint(0.7, 0.3, 0, 0), p) == 2);
  }

  TEST_CASE("Kirillov form is antisymmetric and pairs brackets") {
    const CoadjointPoint z(0.3, -1.2, 0.8, 0.5);
    const Mat4 k = kirillov_form(z, p);
    CHECK((k + k.transpose()).norm() == 0.0);
    for (int A = 0; A < 4; ++A)
      for (int B = 0; B < 4; ++B)
        CHECK(k(A, B) == doctest::Approx(z.pair(bracket(AlgebraElement::basis(A), AlgebraElement::basis(B), p))));
  }

  TEST_CASE("stabilizer of a case A point contains the centre") {
    const auto s = stability_subalgebra(CoadjointPoint(0, 0, 0.5, -1), p);
    CHECK(s.dim() == 2);
    const Eigen::MatrixXd m = s.matrix();
    Eigen::MatrixXd aug(4, 3);
    aug << m, Vec4(0, 0, 0, 1);
    CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(aug).rank() == 2);
  }

  TEST_CASE("orbit membership") {
    std::mt19937_64 rng(2);
    const CoadjointPoint z(0.4, -0.2, 1.1, -0.7);
    for (int i = 0; i < 20; ++i) CHECK(on_orbit(coadjoint_action(random_group_element(rng, 1.0), z, p), z, p));
    CHECK_FALSE(on_orbit(CoadjointPoint(0.4, -0.2, 1.2, -0.7), z, p));
    CHECK_FALSE(on_orbit(CoadjointPoint(0.4, -0.2, 1.1, -0.6), z, p));
  }

  TEST_CASE("Pukanszky, subordination and maximality for the three cases") {
    CHECK(pukanszky_check(Subalgebra::case_a(), CoadjointPoint(0, 0, 0.5, -1), p).passed());
    CHECK(pukanszky_check(Subalgebra::full(), CoadjointPoint(0, 0, 5, 0), p).passed());
    CHECK(pukanszky_check(Subalgebra::wh(), CoadjointPoint(0.7, 0.3, 0, 0), p).passed());
  }

  TEST_CASE("negative subordination cases") {
    CHECK_FALSE(subordination_check(Subalgebra::case_a(), CoadjointPoint(1, 0, 0, -1), p));
    CHECK_FALSE(subordination_check(Subalgebra::wh(), CoadjointPoint(0, 0, 0.5, -1), p));
    CHECK_FALSE(pukanszky_check(Subalgebra::wh(), CoadjointPoint(0, 0, 0.5, -1), p).passed());
  }

  TEST_CASE("subalgebras close") {
    for (const auto& h : {Subalgebra::case_a(), Subalgebra::full(), Subalgebra::wh()}) CHECK(h.closure_defect(p) < 1e-14);
  }

  TEST_CASE("KKS pairing of orbit tangent vectors") {
    const ModelParams q(-1.5, 1.0);
    std::mt19937_64 rng(9);
    const CoadjointPoint z(0.4, -0.2, 1.1, -0.7);
    for (int i = 0; i < 10; ++i) {
      const AlgebraElement x = random_algebra_element(rng, 1.0), y = random_algebra_element(rng, 1.0);
      const double b = kks_pairing(z, tangent(z, x, q), tangent(z, y, q), q);
      CHECK(b == doctest::Approx(-z.pair(bracket(x, y, q))).epsilon(1e-7));
    }
  }
}
