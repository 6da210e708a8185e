#pragma once

// Self-checks that compare the brute-force kernels with the closed forms,
// the classification criteria with the witness test, and the polytope data
// with the printed tables. Each check reports instead of throwing.

#include <string>
#include <vector>

namespace toric3 {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::vector<std::string> failures;
  std::string summary;
  double seconds = 0;
};

struct VerifyOptions {
  unsigned threads = 0;
};

/// T(s,t) brute distance equals the closed form for every census tuple.
CheckResult check_dim4_formulas(long long q, const VerifyOptions& opts = {});
/// Width-1 five-point codes against their formulas and bounds (q >= 5).
CheckResult check_dim5_formulas(long long q, const VerifyOptions& opts = {});
/// Embedded polygons: exact distances, the strict bound for E:4, and the
/// product law against the planar code (q >= 5).
CheckResult check_degenerate(long long q, const VerifyOptions& opts = {});
/// Census of both kinds (width-1 only for q >= 5) with zero disagreements.
CheckResult check_concordance(long long q, const VerifyOptions& opts = {});
/// The fixed pair over GF(q): q = 7, T(1,4) ~ T(3,4); q = 13, T(1,9) and
/// T(2,9) inequivalent with differing weight enumerators. Other q fail.
CheckResult check_spot_case(long long q, const VerifyOptions& opts = {});
/// White maps and orbits for every t <= tmax.
CheckResult check_white_orbits(int tmax = 12);
/// Distance agreement, scaling invariance, enumerator divisibility and the
/// cell-size law on every census code over GF(q).
CheckResult check_structural(long long q, const VerifyOptions& opts = {});
/// Volume vectors and widths of the width-1 and width-2 representatives.
CheckResult check_tables();

/// The checks for one field: criteria 1, 2, 3, 4 and 6 where they apply,
/// plus the spot pair living over this field.
std::vector<CheckResult> verify_field(long long q, const VerifyOptions& opts = {});
/// Criteria 5 and 7, which do not depend on q.
std::vector<CheckResult> verify_geometry();

}  // namespace toric3
