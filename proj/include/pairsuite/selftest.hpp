#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pairsuite {

/// Deliberate defects for exercising the self-test's failure path.
enum class SelfTestFault {
  kNone,
  kBallCorrection,  // drop the full-weight term from the closed-form ball size
};

struct SuiteOutcome {
  std::string name;
  bool passed = false;
  std::string note;  // first failure, empty on success
};

/// Oracle suites at pinned small parameters: closed-form vs enumerated ball
/// sizes, metric axioms, decoder vs exhaustive search, and the double
/// counting identity. Deterministic function of `fault`.
std::vector<SuiteOutcome> selftest_suites(SelfTestFault fault = SelfTestFault::kNone);

/// Runs the suites and writes one line per suite plus a summary line.
/// True iff all pass.
bool run_selftest(std::ostream& out, SelfTestFault fault = SelfTestFault::kNone);

}  // namespace pairsuite
