#include "toric3/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "toric3/error.hpp"
#include "toric3/galois.hpp"

namespace toric3 {
namespace {

void require_field(long long q, long long minimum) {
  if (!prime_power(q) || q < minimum)
    throw Error(ErrorCode::InvalidField,
                "q = " + std::to_string(q) + " must be a prime power >= " + std::to_string(minimum));
}

DistanceResult clamp_interval(long long lower, long long upper, long long n, DistanceResult::Method m) {
  DistanceResult r;
  r.vacuous = lower <= 0;
  r.lower = std::clamp(lower, 1LL, n);
  r.upper = std::clamp(upper, r.lower, n);
  r.exact = r.lower == r.upper;
  r.method = m;
  return r;
}

// (1 + q + 2 sqrt q)(q - 1) = (1 + q)(q - 1) + sqrt(4 q (q-1)^2).
// Returns the integer part of the radical term and whether it is exact.
std::pair<long long, bool> radical_term(long long q) {
  const long long sq = 4 * q * (q - 1) * (q - 1);
  const long long r = isqrt(sq);
  return {r, r * r == sq};
}

}  // namespace

long long isqrt(long long n) {
  if (n < 0) throw Error(ErrorCode::InvalidParams, "isqrt of a negative number");
  long long r = static_cast<long long>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

DistanceResult dim4_distance(long long q, long long t) {
  require_field(q, 3);
  if (t < 1) throw Error(ErrorCode::InvalidParams, "t must be >= 1");
  const long long n = (q - 1) * (q - 1) * (q - 1);
  const long long g = std::gcd(t, q - 1);
  const long long d = (g == 1) ? n - (q - 1) * (q - 1) : n - (q - 1) * (q - 3) - q * g;
  return DistanceResult::exact_value(d, DistanceResult::Method::Formula);
}

DistanceResult degenerate_distance(int i, long long q) {
  if (i < 1 || i > 4) throw Error(ErrorCode::OutOfRange, "embedded polygon index must be in 1..4");
  // x^3 (resp. x^2) must stay below q - 1 for the rows to be distinct
  const long long minimum = (i == 1) ? 5 : (i == 2 ? 4 : 3);
  require_field(q, minimum);
  const long long n = (q - 1) * (q - 1) * (q - 1);
  switch (i) {
    case 1: return DistanceResult::exact_value(n - 3 * (q - 1) * (q - 1), DistanceResult::Method::Formula);
    case 2: return DistanceResult::exact_value(n - 2 * (q - 1) * (q - 1), DistanceResult::Method::Formula);
    case 3: return DistanceResult::exact_value(n - (2 * q - 3) * (q - 1), DistanceResult::Method::Formula);
    default: break;
  }
  // d > B - R with R = sqrt(4q(q-1)^2): the largest admissible B - d is the
  // largest integer strictly below R.
  const long long B = n - (1 + q) * (q - 1);
  auto [r, exact_root] = radical_term(q);
  const long long below = exact_root ? r - 1 : r;
  return clamp_interval(B - below, n, n, DistanceResult::Method::Bound);
}

DistanceResult dim5_distance(Width1Signature sig, long long q, int s, int t) {
  require_field(q, 5);
  // validates the parameters against the representative table
  width1_representative(sig, s, t);
  const long long n = (q - 1) * (q - 1) * (q - 1);
  switch (sig) {
    case Width1Signature::Sig21:
      return DistanceResult::exact_value(n - 2 * (q - 1) * (q - 1), DistanceResult::Method::Formula);
    case Width1Signature::Sig22:
      return DistanceResult::exact_value(n - (2 * q * q - 5 * q + 3), DistanceResult::Method::Formula);
    case Width1Signature::Sig31: {
      // d >= B - R, i.e. d >= B - floor(R)
      const long long B = n - (1 + q) * (q - 1);
      return clamp_interval(B - radical_term(q).first, n, n, DistanceResult::Method::Bound);
    }
    case Width1Signature::Sig32: {
      const long long lower = n - (q - 2) * (q - 2) - static_cast<long long>(s + t) * q;
      const long long upper = n - (q - 1) * (q - 3) - q * std::gcd(static_cast<long long>(s + t), q - 1);
      return clamp_interval(lower, upper, n, DistanceResult::Method::Bound);
    }
  }
  throw Error(ErrorCode::InvalidParams, "unknown signature");
}

std::optional<DistanceResult> formula_distance(const LatticePolytope& P, long long q) {
  switch (P.family) {
    case Family::EmptyTetra: return dim4_distance(q, P.t.value());
    case Family::EmbeddedPolygon: return degenerate_distance(P.index, q);
    case Family::Sig21:
    case Family::Sig22:
    case Family::Sig31:
    case Family::Sig32:
      return dim5_distance(*width1_signature_of(P.family), q, P.s.value_or(0), P.t.value_or(0));
    default: return std::nullopt;
  }
}

}  // namespace toric3
