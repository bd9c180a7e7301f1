#pragma once

#include "scatterlab/families.hpp"

#include <string>
#include <vector>

namespace scatterlab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // deterministic: no timings
};

inline constexpr int kCriterionCount = 12;

/// Runs criterion 1..12. Over-budget runs fail with "time budget exceeded".
CriterionResult run_criterion(int id);

/// "PASS  #3 cube-recovery: ..." or "FAIL ...".
std::string format_line(const CriterionResult& r);

/// Informational companion to criterion 10: the signature of the derived
/// set of the closure, which is where the scaffold's S actually shows up.
std::string corrected_signature_line();

/// The twenty terms used for oracle agreement.
std::vector<Term> oracle_corpus();

/// One or more specs for every family, used for round-trip checks.
std::vector<FamilySpec> catalog_specs();

/// All nonempty subsets of {lo, ..., hi}.
std::vector<std::set<int>> nonempty_subsets(int lo, int hi);

}  // namespace scatterlab
