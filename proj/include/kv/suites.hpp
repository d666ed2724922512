#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kv/polynomial.hpp"

namespace kv {

struct SuiteCase {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteCase> cases;

  int passed() const {
    int k = 0;
    for (const SuiteCase& c : cases) k += c.pass;
    return k;
  }
  int total() const { return static_cast<int>(cases.size()); }
  bool all_pass() const { return passed() == total(); }
};

// Available verification suites:
//   main-theorem     K = V ⟺ lci on fixtures + random codim-2 ideals
//   herzog           slack H(I/I²) − 2·deg Z ≥ 0 everywhere
//   arrangements     the 16-case (m,n) ∈ [1,4]² closed-formula sweep
//   five-points      the 4-generator counterexample, several seeds
//   sym2             symmetric-square Euler test vs lci verdicts
//   saturation-lemma K, V saturated; saturate(I²) = saturate(I·I^sat)
//   oracle           Gröbner Hilbert dims vs Gaussian-elimination dims
std::vector<std::string> suite_names();

// trials ≤ 0 picks the suite's default trial count.
SuiteResult run_suite(const std::string& name, int trials,
                      std::uint64_t seed);

// The named fixture ideals shared across suites and tests.
std::vector<std::pair<std::string, std::vector<Polynomial>>>
standard_fixtures();

}  // namespace kv
