// Acceptance suite: one PASS/FAIL line per criterion, failure details
// indented below it. Exit status 0 only if every criterion passes.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "toric3/verify.hpp"

using namespace toric3;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<CheckResult> parts;
};

bool report(const Criterion& c) {
  bool ok = true;
  double seconds = 0;
  for (const auto& p : c.parts) {
    ok = ok && p.passed;
    seconds += p.seconds;
  }
  std::printf("criterion %d: %s  %s (%.2fs)\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(), seconds);
  for (const auto& p : c.parts) {
    std::printf("    %-4s %s: %s\n", p.passed ? "ok" : "FAIL", p.name.c_str(), p.summary.c_str());
    for (const auto& f : p.failures) std::printf("         %s\n", f.c_str());
  }
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  const VerifyOptions opts{};
  std::vector<Criterion> criteria;

  Criterion c1{1, "dim-4 brute force equals the closed form exactly, q in {5,7,8,9}", {}};
  for (long long q : {5, 7, 8, 9}) c1.parts.push_back(check_dim4_formulas(q, opts));
  criteria.push_back(c1);

  Criterion c2{2, "width-1 five-point formulas and bounds, q in {5,7} (exact, 0 tolerance)", {}};
  for (long long q : {5, 7}) c2.parts.push_back(check_dim5_formulas(q, opts));
  criteria.push_back(c2);

  Criterion c3{3, "embedded-polygon distances, strict E:4 bound, product law, q in {5,7}", {}};
  for (long long q : {5, 7}) c3.parts.push_back(check_degenerate(q, opts));
  criteria.push_back(c3);

  Criterion c4{4, "classification concordance at q in {5,7} and spot cases", {}};
  for (long long q : {5, 7}) c4.parts.push_back(check_concordance(q, opts));
  for (long long q : {7, 13}) c4.parts.push_back(check_spot_case(q, opts));
  criteria.push_back(c4);

  Criterion c5{5, "White maps and orbits, t <= 12", {check_white_orbits(12)}};
  criteria.push_back(c5);

  Criterion c6{6, "structural invariants on every code, q in {5,7}", {}};
  for (long long q : {5, 7}) c6.parts.push_back(check_structural(q, opts));
  criteria.push_back(c6);

  Criterion c7{7, "volume vectors up to sign and widths of the tabulated representatives", {check_tables()}};
  criteria.push_back(c7);

  int failed = 0;
  for (const auto& c : criteria) failed += !report(c);
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
