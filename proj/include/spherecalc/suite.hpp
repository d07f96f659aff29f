#pragma once

#include "spherecalc/emit.hpp"

#include <string>
#include <vector>

namespace sc {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  int order = 0;
  std::vector<CheckResult> checks;
  bool ok() const;
  // First failing check, or nullptr.
  const CheckResult* first_failure() const;
};

// Acceptance criteria with pinned parameters, numbered 1 to 8.
CheckResult criterion_elliptic_identities();
CheckResult criterion_small_formulas();
CheckResult criterion_embedded_generality();
CheckResult criterion_bezout();
CheckResult criterion_immersed();
CheckResult criterion_finite_type();
CheckResult criterion_lens_posets();
CheckResult criterion_minimal_dimension();
std::vector<CheckResult> acceptance_criteria();

// Suites: core, elliptic, blowup, embedded, immersed, lens, cli, or all.
SuiteReport run_suite(const std::string& name, int order);

// A relation document: kind "formal" (FormalExpr sides over twist patterns),
// "embedded" or "immersed".
SuiteReport verify_relation_document(const Json& doc, int order);

std::string emit_suite(const SuiteReport& rep, Format f);

}  // namespace sc
