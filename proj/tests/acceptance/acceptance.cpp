// Acceptance harness: one PASS/FAIL line per criterion, with tolerances
// enforced by the suites and runtime limits enforced here.
//
// usage: pext_acceptance <path-to-pext-executable>

#include "pext/suites.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

namespace {

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  ///< 0: no runtime limit
};

constexpr Criterion kCriteria[] = {
    {1, "cohomology dimensions of i12 and p(1,1)", 1.0},
    {2, "structural report: central/derived series, real ad spectrum, trace", 5.0},
    {3, "coadjoint invariance of the Casimir and u3", 1.0},
    {4, "Pukanszky, subordination and maximality for cases A, B, C", 2.0},
    {5, "representation residuals for cases A, B, C", 60.0},
    {6, "second-order generator/finite-difference convergence", 10.0},
    {7, "Dirac condition, covariance and degree-3 rejection", 30.0},
    {8, "classical comoments, spacetime brackets and pullback", 2.0},
    {9, "dynamics: closed form vs oracles, norm, energy minimum", 120.0},
    {10, "determinism of all-checks reports", 0.0},
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

/// Runs `pext all-checks --seed 42` twice and compares the reports byte for byte.
bool cli_runs_identical(const std::string& exe, std::string& detail) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path a = dir / ("pext_acceptance_a_" + std::to_string(::getpid()) + ".json");
  const fs::path b = dir / ("pext_acceptance_b_" + std::to_string(::getpid()) + ".json");
  const std::string base = quote(exe) + " all-checks --seed 42 --output ";
  const int ra = std::system((base + quote(a.string())).c_str());
  const int rb = std::system((base + quote(b.string())).c_str());
  const std::string ta = read_file(a), tb = read_file(b);
  fs::remove(a);
  fs::remove(b);
  if (ra != 0 || rb != 0) {
    detail = "all-checks exit status " + std::to_string(ra) + "/" + std::to_string(rb);
    return false;
  }
  if (ta.empty() || ta != tb) {
    detail = "reports differ";
    return false;
  }
  detail = "cli reports identical (" + std::to_string(ta.size()) + " bytes)";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: pext_acceptance <path-to-pext>\n";
    return 2;
  }
  const std::string exe = argv[1];
  pext::SuiteConfig cfg;
  cfg.seed = 42;

  int failures = 0;
  for (const auto& c : kCriteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const pext::SuiteReport report = pext::run_suite(c.id, cfg);
    std::string detail;
    bool ok = report.passed();
    if (c.id == 10) ok = cli_runs_identical(exe, detail) && ok;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_seconds == 0.0 || secs < c.limit_seconds;
    if (!ok && detail.empty()) {
      const auto* f = report.first_failure();
      detail = f ? f->name + " = " + std::to_string(f->value) + " (" + pext::comparison_symbol(f->comparison) + " " +
                       std::to_string(f->threshold) + " required)"
                 : "no checks";
    }
    if (ok && !in_time) detail = "runtime limit exceeded";
    const bool pass = ok && in_time;
    if (!pass) ++failures;

    char line[512];
    std::snprintf(line, sizeof line, "%s criterion %2d: %-68s checks=%-3zu max_residual=%-10.3g runtime=%.3fs",
                  pass ? "PASS" : "FAIL", c.id, c.title, report.checks.size(), report.max_residual(), secs);
    std::cout << line;
    if (c.limit_seconds > 0.0) std::cout << " (limit " << c.limit_seconds << "s)";
    if (!detail.empty()) std::cout << "  " << detail;
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
