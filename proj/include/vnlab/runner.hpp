#pragma once

#include <string>
#include <vector>

#include "vnlab/config.hpp"

namespace vnlab {

struct SuiteReport {
  std::string suite;
  bool passed = false;
  long elements = 0;
  long checked = 0;
  std::uint64_t seed = 0;
  long ms = 0;
  std::string note;         // extra key=value fields, e.g. divisibility
  std::string counterexample;

  std::string textLine() const;  // RESULT suite=... status=... elements=... ...
  std::string tsvLine() const;   // same fields minus wall time, tab-separated
};

struct RunResult {
  std::vector<SuiteReport> reports;

  int exitStatus() const;  // 0 all pass, 1 some suite failed
  std::string render(OutputFormat fmt) const;
};

// Builds the truncated sketch for the configured algebra (one full-projection
// generator), the homomorphism presheaf, and the moduli monoid, then runs the
// selected suites in the fixed order monoid, poset, sheaf, complete,
// wedge-vee, cone.
RunResult run_suites(const RunConfig& cfg);

}  // namespace vnlab
