#pragma once

#include <string>
#include <vector>

#include "filling/filling_functions.hpp"

namespace filling {

struct CheckResult {
  std::string name;
  std::string instance;
  double lhs = 0;
  double rhs = 0;
  bool pass = false;
  bool gating = true;            // the empirical radius check only reports
  std::string counterexample;    // serialized word + diagram + trace on failure
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  int failures() const;
};

/// Evaluate every inequality on every applicable instance: the
/// g0 <= h0 <= 2K f0 + n chain over the table, the scheduler bound with its
/// two in-proof profile assertions and the oracle sandwich on the fixture
/// diagrams, the vertex-valence bounds, the star-neighbourhood area growth
/// step, and (reported, non-gating) the radius bound with the empirically
/// estimated isoperimetric constant.  Failures become report entries
/// carrying a serialized counterexample, never exceptions.
VerificationReport verify_paper_inequalities(const Presentation& p, const FillingTable& table,
                                             const std::vector<VanKampenDiagram>& fixtures);

std::string report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

}  // namespace filling
