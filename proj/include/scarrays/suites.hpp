#pragma once

#include "scarrays/fixtures.hpp"
#include "scarrays/freeproduct.hpp"
#include "scarrays/properarray.hpp"
#include "scarrays/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sca {

struct SuiteOptions {
  bool relaxed = false;
  ProperArrayParams params;       // fixed constants unless relaxed
  std::uint64_t seed = 1;
  std::size_t samples = 64;       // random pairs on top of the scenario pairs
  int radius = 3;                 // ball the random pairs are drawn from
  bool scenarios = true;
  bool unsafe_no_cprime = false;
  std::size_t max_vertices = 2000000;

  // embed
  int N = 0;
  std::optional<long> exponent;
  std::uint64_t cap = 1000000;
  std::size_t component = 0;

  // freeproduct
  int syllable_norm = 10;
  int properness_N = 3;
};

extern const std::vector<std::string> kSuites;

// Default mode: the presentation must be C'(1/33) and the fixed constants are used.
// Relaxed mode: lambda comes from the presentation; bounds turn informational
// when the constants leave the proven range.
Presentation prepare(const Presentation& p, SuiteOptions& opt);

// Scenario pairs plus seeded draws from the ball, stratified by distance to 1.
std::vector<fixtures::DriftPair> sample_pairs(const Presentation& p, const SuiteOptions& opt);

Report run_suite(const std::string& suite, const Presentation& p, SuiteOptions opt);

// Free-product combiner checks over normal forms with at most `syllables`
// syllables drawn from the element lists, one list per factor.
Report run_freeproduct(const std::vector<FactorArray>& factors, const std::vector<std::vector<Word>>& elems,
                       int syllables, int properness_N);

// C'(lambda) check with a brute-force cross-check when the set is small.
Report run_check(const Presentation& p);

}  // namespace sca
