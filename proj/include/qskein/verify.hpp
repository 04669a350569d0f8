#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qskein {

struct VerifyOptions {
  int max_size = 3;           // partition size / degree bound
  int cases = 40;             // randomized cases per property
  std::uint64_t seed = 7001;  // deterministic by default
  int max_crossings = 24;
};

struct SuiteResult {
  std::string suite;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;
  bool ok() const { return failed == 0; }
};

// Suites: ring, skein, q-basis, conversion, evaluation, homfly.
const std::vector<std::string>& verify_suite_names();

// Runs one named suite ("all" runs every suite and merges the counts).
// Unknown names throw std::invalid_argument.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace qskein
