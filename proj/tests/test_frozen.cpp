#include <doctest.h>

#include "toric3/formulas.hpp"
#include "toric3/toric_code.hpp"

using namespace toric3;

// Distances pinned by an independent enumeration outside this code base.

TEST_CASE("P32 distances over GF(5)") {
  const auto f = make_field(5);
  const std::vector<std::tuple<int, int, long long>> expected{{1, 1, 45}, {1, 2, 45}, {1, 3, 36}, {2, 3, 45}};
  for (auto [s, t, d] : expected) {
    CAPTURE(s);
    CAPTURE(t);
    const long long brute = min_distance_brute(build_code(f, width1_representative(Width1Signature::Sig32, s, t))).lower;
    CHECK(brute == d);
    CHECK(dim5_distance(Width1Signature::Sig32, 5, s, t).contains(brute));
  }
}

TEST_CASE("P32 distances over GF(7)") {
  const auto f = make_field(7);
  const std::vector<std::tuple<int, int, long long>> expected{
      {1, 1, 177}, {1, 2, 171}, {1, 3, 171}, {2, 3, 171}, {1, 4, 177},
      {3, 4, 171}, {1, 5, 150}, {2, 5, 177}, {3, 5, 171}, {4, 5, 171},
  };
  for (auto [s, t, d] : expected) {
    CAPTURE(s);
    CAPTURE(t);
    CHECK(min_distance_brute(build_code(f, width1_representative(Width1Signature::Sig32, s, t))).lower == d);
  }
}

TEST_CASE("P31 and E:4 distances") {
  for (auto [q, d] : std::vector<std::pair<int, long long>>{{5, 40}, {7, 162}}) {
    const auto f = make_field(q);
    const long long p31 = min_distance_brute(build_code(f, width1_representative(Width1Signature::Sig31))).lower;
    const long long e4 = min_distance_brute(build_code(f, embedded_polygon(4))).lower;
    CHECK(p31 == d);
    CHECK(e4 == d);
    CHECK(p31 >= dim5_distance(Width1Signature::Sig31, q).lower);
    CHECK(e4 >= degenerate_distance(4, q).lower);
  }
}
