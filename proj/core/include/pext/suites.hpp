#pragma once

#include "pext/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pext {

enum class Comparison { LessEqual, Greater, GreaterEqual, Equal };

const char* comparison_symbol(Comparison c);

struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  Comparison comparison = Comparison::LessEqual;
  bool passed = false;
};

CheckResult make_check(std::string name, double value, Comparison cmp, double threshold);

struct SuiteReport {
  int criterion = 0;
  std::string name;
  std::vector<CheckResult> checks;

  bool passed() const;
  /// Largest value among the "<=" checks (0 if none).
  double max_residual() const;
  /// First failing check, or nullptr.
  const CheckResult* first_failure() const;
};

struct SuiteConfig {
  ModelParams model{};
  double mass = 1.0;
  std::uint64_t seed = 42;
  int threads = 0;  ///< 0: POINCARE_EXT_THREADS, else hardware concurrency
};

SuiteReport suite_cohomology(const SuiteConfig& cfg);       // 1
SuiteReport suite_structure(const SuiteConfig& cfg);        // 2
SuiteReport suite_coadjoint(const SuiteConfig& cfg);        // 3
SuiteReport suite_pukanszky(const SuiteConfig& cfg);        // 4
SuiteReport suite_representations(const SuiteConfig& cfg);  // 5
SuiteReport suite_generators(const SuiteConfig& cfg);       // 6
SuiteReport suite_quantization(const SuiteConfig& cfg);     // 7
SuiteReport suite_classical(const SuiteConfig& cfg);        // 8
SuiteReport suite_dynamics(const SuiteConfig& cfg);         // 9
SuiteReport suite_determinism(const SuiteConfig& cfg);      // 10 (in-process rerun)

/// Runs the suite for criterion 1..10.
SuiteReport run_suite(int criterion, const SuiteConfig& cfg);

/// Runs all suites in parallel workers; the result is ordered by criterion.
std::vector<SuiteReport> run_all(const SuiteConfig& cfg);

/// Worker count: cfg.threads if > 0, else POINCARE_EXT_THREADS if set and valid,
/// else hardware concurrency (at least 1).
int worker_count(const SuiteConfig& cfg);

/// Versioned JSON report (schema 1), free of timings so that runs are byte-comparable.
std::string reports_to_json(const std::vector<SuiteReport>& reports, const SuiteConfig& cfg);

}  // namespace pext
