#pragma once

#include <string>
#include <vector>

namespace poplab {

struct CheckResult {
  std::string what;
  bool pass = false;
  std::string detail;  // nonempty on failure
};

struct ClaimReport {
  std::string claim;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  int failed() const {
    int k = 0;
    for (const auto& c : checks) k += c.pass ? 0 : 1;
    return k;
  }
};

// Registered claim identifiers, in report order:
//   thm2.1   avoider counts vs k-step Fibonacci numbers
//   thm3.1   banded window counts vs exhaustive avoider counts
//   prop4.1  separability filter is a no-op when j = 3 or l = 3
//   thm4.2   system solver vs the explicit closed forms
//   thm5.1..thm5.6  closed-form series vs brute-force joint distributions
//   eq1.1    the j = 2 / l = 2 classes collapse to a single monomial
//   inv-com  the (j,l) <-> (l,j) statistics swap
//   cor5.1..cor5.6  univariate corollary sequences
std::vector<std::string> registered_claims();

// n_max <= 0 selects the claim's default oracle depth. Exhaustive checks are
// clamped to the enumeration caps regardless.
ClaimReport verify_claim(const std::string& claim, int n_max = 0, int jobs = 0);
std::vector<ClaimReport> verify_all(int n_max = 0, int jobs = 0);

}  // namespace poplab
