// Named verification suites aggregating the module-level checks; consumed by
// the CLI (JSON reports) and the acceptance runner.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ulam {

struct SuiteOptions {
  std::uint64_t ymax = 63;        // tensor-inside / tensor-outside y cap
  int dmax = 4;                   // tensor-inside block-size cap
  int kmax = 7;                   // zumkeller suite: exponents k <= kmax
  int lmax = 8;                   // tensor-outside cap on ell
  std::uint64_t struct_ymax = 255;  // structural suites (four-parts, bounds, ...)
  int word_len = 16;              // oracle-agreement exhaustive word length
  int fractal_kmax = 10;          // rho-convergence cap
  bool quick = false;             // shrink every cap for a fast pass
};

struct SuiteResult {
  struct Failure {
    std::string inputs;
    std::string expected;
    std::string got;
  };

  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;  // first few only
  double elapsed_seconds = 0.0;
  std::vector<SuiteResult> subsuites;  // populated by "all"

  bool pass() const { return failure_count == 0; }
  void fail(std::string inputs, std::string expected, std::string got);
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Runs one suite (or "all"). Unknown names throw std::invalid_argument.
SuiteResult run_suite(const std::string& name, SuiteOptions options);

}  // namespace ulam
