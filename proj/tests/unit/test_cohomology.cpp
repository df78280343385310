#include "pext/cohomology.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace pext;

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return nlohmann::json::parse(ss.str());
}

}  // namespace

TEST_SUITE("cohomology") {
  TEST_CASE("extended Poincare algebra") {
    const auto sc = catalog::extended_poincare();
    const auto b = betti_numbers(sc);
    REQUIRE(b.size() == 5);
    CHECK(b[0] == 1);
    CHECK(b[1] == 1);
    CHECK(b[2] == 0);
    CHECK(b[3] == 1);
    CHECK(b[4] == 1);
  }

  TEST_CASE("unextended Poincare algebra has one central extension") {
    CHECK(cohomology_dim(2, catalog::poincare_11()) == 1);
  }

  TEST_CASE("the central charge value does not change the dimensions") {
    for (double B : {0.5, -3.0, 7.25}) CHECK(betti_numbers(catalog::extended_poincare(ModelParams(B, 1.0))) ==
                                             std::vector<int>{1, 1, 0, 1, 1});
  }

  TEST_CASE("abelian algebras give binomial coefficients") {
    for (int n = 1; n <= 5; ++n) {
      const auto b = betti_numbers(catalog::abelian(n));
      for (int k = 0; k <= n; ++k) CHECK(b[k] == binomial(n, k));
    }
  }

  TEST_CASE("semisimple so(2,1) has the cohomology of a 3-sphere") {
    CHECK(betti_numbers(catalog::so21()) == std::vector<int>{1, 0, 0, 1});
  }

  TEST_CASE("Euler characteristic vanishes and unimodular algebras obey duality") {
    for (const auto& name : {"i12", "p11", "so21", "wh", "abelian4"}) {
      const auto b = betti_numbers(catalog::by_name(name));
      int chi = 0;
      for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 ? -1 : 1) * b[k];
      CHECK(chi == 0);
      for (std::size_t k = 0; k < b.size(); ++k) CHECK(b[k] == b[b.size() - 1 - k]);
    }
  }

  TEST_CASE("d squared vanishes exactly and numerically") {
    for (const auto& name : {"i12", "p11", "so21", "wh"}) {
      const auto sc = catalog::by_name(name);
      for (int k = 0; k + 1 < sc.dim(); ++k) {
        CHECK(exact_dd_vanishes(k, sc));
        const Eigen::MatrixXd dd = ce_differential(k + 1, sc) * ce_differential(k, sc);
        CHECK(dd.cwiseAbs().maxCoeff() < 1e-14);
      }
    }
  }

  TEST_CASE("H1 is the dual of the abelianization") {
    for (const auto& name : {"i12", "p11", "so21", "wh"}) {
      const auto sc = catalog::by_name(name);
      CHECK(cohomology_dim(1, sc) == sc.abelianization_dim());
    }
  }

  TEST_CASE("cochain spaces") {
    const auto s = cochain_space(4, 2);
    CHECK(s.dim() == 6);
    CHECK(cochain_space(4, 0).dim() == 1);
    CHECK(cochain_space(4, 4).dim() == 1);
  }

  TEST_CASE("data files reproduce their expected Betti numbers") {
    for (const auto& name : {"i12", "p11", "so21", "wh", "abelian3"}) {
      const std::string path = std::string(PEXT_DATA_DIR) + "/algebras/" + name + ".json";
      const auto sc = load_algebra_file(path);
      const auto expected = read_json(path).at("expected_betti").get<std::vector<int>>();
      CHECK(betti_numbers(sc) == expected);
      CHECK(betti_numbers(catalog::by_name(name)) == expected);
    }
  }

  TEST_CASE("json round trip") {
    const auto sc = catalog::extended_poincare(ModelParams(2.0, 1.0));
    const auto back = algebra_from_json(algebra_to_json(sc));
    REQUIRE(back.dim() == sc.dim());
    for (int C = 0; C < 4; ++C)
      for (int A = 0; A < 4; ++A)
        for (int B = 0; B < 4; ++B) CHECK(back(C, A, B) == sc(C, A, B));
  }

  TEST_CASE("invalid algebras are rejected") {
    // [X0,X1] = X1, [X0,X2] = X1, [X1,X2] = X0 violates Jacobi
    const std::string bad = R"({"dim":3,"basis_names":["X0","X1","X2"],
      "brackets":[["X0","X1",[0,1,0]],["X0","X2",[0,1,0]],["X1","X2",[1,0,0]]]})";
    CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(algebra_from_json("{not json"), std::invalid_argument);
    CHECK_THROWS_AS(algebra_from_json(R"({"dim":2,"basis_names":["a"],"brackets":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(catalog::by_name("e8"), std::invalid_argument);
  }

  TEST_CASE("rank helpers") {
    Eigen::MatrixXd m(2, 2);
    m << 1, 2, 2, 4;
    CHECK(numeric_rank(m) == 1);
    const auto sc = catalog::extended_poincare();
    for (int k = 0; k < sc.dim(); ++k) CHECK(exact_differential_rank(k, sc) == numeric_rank(ce_differential(k, sc)));
  }
}
