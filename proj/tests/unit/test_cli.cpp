#include "pext/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace pext;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("cohomology example") {
    const auto r = run_cli({"cohomology", "--algebra", "i12", "--degree", "2"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("dim") == 0);
    const auto all = nlohmann::json::parse(run_cli({"cohomology", "--algebra", "p11"}).out);
    CHECK(all.at("betti") == nlohmann::json({1, 1, 1, 1}));
  }

  TEST_CASE("orbit example") {
    const auto r = run_cli({"orbit", "classify", "--zeta", "0,0,0.5,-1"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("tag") == "CaseA");
    CHECK(j.at("schema") == 1);
    CHECK(nlohmann::json::parse(run_cli({"orbit", "act", "--zeta=1,2,0.3,-1", "--g=0.2,0.1,-0.4,1"}).out).at("passed") ==
          true);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({"cohomology", "--bogus"}).code == cli::kExitUsage);
    CHECK(run_cli({}).code == cli::kExitUsage);
    CHECK(run_cli({"orbit", "classify", "--zeta", "1,2"}).code == cli::kExitUsage);
    CHECK(run_cli({"cohomology", "--algebra", "e8"}).code == cli::kExitUsage);
    CHECK(run_cli({"--B", "0", "cohomology"}).code == cli::kExitUsage);
    CHECK(run_cli({"rep", "verify", "--case", "D"}).code == cli::kExitUsage);
  }

  TEST_CASE("help exits with 0 and documents CSV columns") {
    const auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("tau,q0,q1,ptilde") != std::string::npos);
  }

  TEST_CASE("degree-3 quantization is a numeric failure with a named residual") {
    const auto r = run_cli({"quantize", "op", "--poly", "q^2p"});
    CHECK(r.code == cli::kExitNumericFailure);
    CHECK(nlohmann::json::parse(r.out).at("first_failure") == "quantization_obstruction");
    CHECK(run_cli({"quantize", "op", "--poly", "qp + 1"}).code == 0);
  }

  TEST_CASE("representation verification") {
    for (const char* c : {"A", "B", "C"}) CHECK(run_cli({"rep", "verify", "--case", c, "--trials", "2"}).code == 0);
    const auto r = run_cli({"rep", "apply", "--g=0.1,0.2,0.3,0.4", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("x,re,im,abs\n", 0) == 0);
  }

  TEST_CASE("csv simulations") {
    const auto t = run_cli({"trajectory", "--steps", "4"});
    CHECK(t.code == 0);
    CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 6);
    const auto e = run_cli({"evolve", "--n", "20"});
    CHECK(e.code == 0);
    CHECK(e.out.rfind("E,re_c,im_c,abs_c", 0) == 0);
    const auto j = run_cli({"--format", "json", "evolve", "--n", "3"});
    CHECK(nlohmann::json::parse(j.out).at("rows").size() == 3);
  }

  TEST_CASE("selected criteria are deterministic") {
    const std::vector<std::string> args = {"all-checks", "--seed", "42", "--criterion", "1", "--criterion", "3"};
    const auto a = run_cli(args), b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
