#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "distcol/constructions.hpp"

namespace distcol {

// Invariant suites behind `distcol verify`. Each suite runs a fixed family of
// checks over a parameter grid (deterministic suites) or over seeded random
// instances (property suites) and reports one row per check.

struct CheckRow {
  std::string suite;
  std::string instance;
  std::string check;
  std::string value;
  std::string expected;
  bool pass = true;
};

struct SuiteParams {
  std::vector<int> d;
  std::vector<int> t;
  std::vector<int> q;
  std::vector<int> k;
  int trials = 0;  // 0 selects the suite default
  std::uint64_t seed = 1;
  int ell = 0;     // 0 selects the suite default
  SizeCap cap;
  int exact_limit = 64;
  int cycle_cap = 16;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckRow> rows;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// P4 P5 P6 P7 P9 P10 L8 EQ1 T1V T1E
const std::vector<std::string>& suite_ids();

/// Fills in suite defaults and checks every grid point against the
/// construction preconditions. Throws InvalidArgument naming the first
/// violation, before any construction work.
SuiteParams resolve_suite_params(const std::string& id, SuiteParams params);

SuiteResult run_suite(const std::string& id, const SuiteParams& params);

}  // namespace distcol
