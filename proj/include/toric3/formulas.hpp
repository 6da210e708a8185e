#pragma once

// Closed-form minimum distances and bounds for the 4-point codes, the
// embedded 4-point polygons, and the width-1 five-point codes.

#include "toric3/polytope.hpp"
#include "toric3/toric_code.hpp"

#include <optional>

namespace toric3 {

/// Exact distance of C_{T(s,t)}; independent of s.
///   gcd(t, q-1) = 1: (q-1)^3 - (q-1)^2
///   otherwise:       (q-1)^3 - (q-1)(q-3) - q gcd(t, q-1)
DistanceResult dim4_distance(long long q, long long t);

/// Embedded polygon i = 1..4. Exact for i <= 3; for i = 4 only the strict
/// lower bound d > (q-1)^3 - (1 + q + 2 sqrt q)(q-1) is known, returned as
/// the smallest integer satisfying it.
DistanceResult degenerate_distance(int i, long long q);

/// Width-1 five-point codes. (2,1) and (2,2) exact; (3,1) lower bound only;
/// (3,2) an interval [lower, upper] whose lower end is clamped to 1.
DistanceResult dim5_distance(Width1Signature sig, long long q, int s = 0, int t = 0);

/// Formula distance for any polytope of a family that has one; nullopt for
/// width-2 rows and custom point sets.
std::optional<DistanceResult> formula_distance(const LatticePolytope& P, long long q);

/// floor(sqrt(n)) for n >= 0, exact.
long long isqrt(long long n);

}  // namespace toric3
