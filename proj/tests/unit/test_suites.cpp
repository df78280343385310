#include "pext/suites.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>

using namespace pext;

TEST_SUITE("suites") {
  TEST_CASE("check comparisons") {
    CHECK(make_check("a", 1e-10, Comparison::LessEqual, 1e-9).passed);
    CHECK_FALSE(make_check("a", 1e-8, Comparison::LessEqual, 1e-9).passed);
    CHECK(make_check("b", 0.2, Comparison::Greater, 0.1).passed);
    CHECK_FALSE(make_check("b", 0.1, Comparison::Greater, 0.1).passed);
    CHECK(make_check("c", 3, Comparison::Equal, 3).passed);
    CHECK_FALSE(make_check("d", std::nan(""), Comparison::LessEqual, 1.0).passed);
  }

  TEST_CASE("report aggregation") {
    SuiteReport r{1, "x", {}};
    CHECK_FALSE(r.passed());
    r.checks.push_back(make_check("a", 0.5, Comparison::LessEqual, 1.0));
    r.checks.push_back(make_check("b", 2.0, Comparison::LessEqual, 1.0));
    CHECK_FALSE(r.passed());
    CHECK(r.max_residual() == 2.0);
    REQUIRE(r.first_failure() != nullptr);
    CHECK(r.first_failure()->name == "b");
  }

  TEST_CASE("json schema and determinism") {
    const SuiteConfig cfg{};
    const auto a = reports_to_json({run_suite(1, cfg), run_suite(3, cfg)}, cfg);
    const auto b = reports_to_json({run_suite(1, cfg), run_suite(3, cfg)}, cfg);
    CHECK(a == b);
    const auto j = nlohmann::json::parse(a);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("suites").size() == 2);
    CHECK(j.at("passed") == true);
  }

  TEST_CASE("different seeds change sampled residuals") {
    SuiteConfig c1{}, c2{};
    c2.seed = 43;
    CHECK(run_suite(3, c1).checks[0].value != run_suite(3, c2).checks[0].value);
  }

  TEST_CASE("worker count") {
    SuiteConfig cfg{};
    cfg.threads = 3;
    CHECK(worker_count(cfg) == 3);
    cfg.threads = 0;
    setenv("POINCARE_EXT_THREADS", "5", 1);
    CHECK(worker_count(cfg) == 5);
    setenv("POINCARE_EXT_THREADS", "bogus", 1);
    CHECK(worker_count(cfg) >= 1);
    unsetenv("POINCARE_EXT_THREADS");
  }

  TEST_CASE("unknown criterion") { CHECK_THROWS_AS(run_suite(11, SuiteConfig{}), std::out_of_range); }
}
