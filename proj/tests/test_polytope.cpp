#include <doctest.h>

#include <numeric>
#include <set>

#include "toric3/error.hpp"
#include "toric3/polytope.hpp"

using namespace toric3;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected toric3::Error");
  return ErrorCode::IOError;
}

std::set<Point3> as_set(const std::vector<Point3>& v) { return {v.begin(), v.end()}; }

// Independent hull test: p is in Conv(v0..v3) iff its barycentric
// coordinates (Cramer's rule) are all >= 0.
bool in_tetra(const std::array<Point3, 4>& v, Point3 p) {
  const long long D = det3(v[1] - v[0], v[2] - v[0], v[3] - v[0]);
  const long long a = det3(p - v[0], v[2] - v[0], v[3] - v[0]);
  const long long b = det3(v[1] - v[0], p - v[0], v[3] - v[0]);
  const long long c = det3(v[1] - v[0], v[2] - v[0], p - v[0]);
  const long long sgn = D > 0 ? 1 : -1;
  return a * sgn >= 0 && b * sgn >= 0 && c * sgn >= 0 && (D - a - b - c) * sgn >= 0;
}

}  // namespace

TEST_CASE("empty_tetrahedron") {
  CHECK(empty_tetrahedron(1, 1).points == std::vector<Point3>{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {1, 1, 1}});
  CHECK(code_of([] { empty_tetrahedron(2, 4); }) == ErrorCode::InvalidParams);
  CHECK(code_of([] { empty_tetrahedron(1, 0); }) == ErrorCode::InvalidParams);
}

TEST_CASE("T(s,t) is empty and has volume t") {
  for (int t = 1; t <= 12; ++t)
    for (int s = 0; s <= t; ++s) {
      if (std::gcd(s, t) != 1) continue;
      const auto P = empty_tetrahedron(s, t);
      const std::array<Point3, 4> v{P.points[0], P.points[1], P.points[2], P.points[3]};
      CHECK(normalized_volume_tetra(v[0], v[1], v[2], v[3]) == t);
      std::size_t inside = 0;
      for (long long x = std::min(0, s); x <= std::max(1, s); ++x)
        for (long long y = 0; y <= t; ++y)
          for (long long z = 0; z <= 1; ++z) inside += in_tetra(v, {x, y, z});
      CHECK(inside == 4);
      CHECK(as_set(lattice_points_in_hull(P.points)) == as_set(P.points));
    }
}

TEST_CASE("width-1 representatives") {
  CHECK(width1_representative(Width1Signature::Sig22).points ==
        std::vector<Point3>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  CHECK(width1_representative(Width1Signature::Sig32, 1, 1).points ==
        std::vector<Point3>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  CHECK(code_of([] { width1_representative(Width1Signature::Sig21, 2, 3); }) == ErrorCode::InvalidParams);
  CHECK(code_of([] { width1_representative(Width1Signature::Sig32, 0, 1); }) == ErrorCode::InvalidParams);
  CHECK(code_of([] { width1_representative(Width1Signature::Sig32, 2, 4); }) == ErrorCode::InvalidParams);
}

TEST_CASE("width-2 representatives") {
  CHECK(width2_representative(1).points ==
        std::vector<Point3>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {1, 2, 3}});
  const auto sig = affine_dependence(width2_representative(2));
  CHECK(sig.pair() == std::pair{4, 1});
  CHECK(sig.dependence == std::array<long long, 5>{-4, 1, 1, 1, 1});
  CHECK(code_of([] { width2_representative(10); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { width2_representative(0); }) == ErrorCode::OutOfRange);
}

TEST_CASE("embedded polygons") {
  CHECK(embedded_polygon(1).points == std::vector<Point3>{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}});
  CHECK(as_set(embedded_polygon(3).points) == std::set<Point3>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  CHECK(embedded_polygon(4).points == std::vector<Point3>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {-1, -1, 0}});
  CHECK(code_of([] { embedded_polygon(5); }) == ErrorCode::OutOfRange);
}

TEST_CASE("affine dependence of the width-1 families") {
  for (int t = 1; t <= 9; ++t) {
    for (int s = 0; 2 * s <= t; ++s) {
      if (std::gcd(s, t) != 1) continue;
      const auto sig = affine_dependence(width1_representative(Width1Signature::Sig21, s, t));
      CHECK(sig.volumes == std::array<long long, 5>{-2LL * t, t, 0, t, 0});
      CHECK(sig.dependence == std::array<long long, 5>{-2, 1, 0, 1, 0});
      CHECK(sig.pair() == std::pair{2, 1});
    }
    for (int s = 1; s <= t; ++s) {
      if (std::gcd(s, t) != 1) continue;
      const auto sig = affine_dependence(width1_representative(Width1Signature::Sig32, s, t));
      CHECK(sig.dependence == std::array<long long, 5>{-s - t, s, t, 1, -1});
      CHECK(sig.pair() == std::pair{3, 2});
    }
  }
  CHECK(affine_dependence(width1_representative(Width1Signature::Sig22)).dependence ==
        std::array<long long, 5>{-1, 1, 1, -1, 0});
}

TEST_CASE("dependence satisfies both sums exactly") {
  std::vector<LatticePolytope> polys;
  for (int row = 1; row <= 9; ++row) polys.push_back(width2_representative(row));
  polys.push_back(width1_representative(Width1Signature::Sig31));
  polys.push_back(width1_representative(Width1Signature::Sig32, 3, 7));
  for (const auto& P : polys) {
    const auto sig = affine_dependence(P);
    long long sum = 0;
    Point3 weighted{0, 0, 0};
    for (std::size_t i = 0; i < 5; ++i) {
      sum += sig.dependence[i];
      weighted = weighted + Point3{sig.dependence[i] * P.points[i].x, sig.dependence[i] * P.points[i].y,
                                   sig.dependence[i] * P.points[i].z};
    }
    CHECK(sum == 0);
    CHECK(weighted == Point3{0, 0, 0});
    long long g = 0;
    for (auto c : sig.dependence) g = std::gcd(g, c < 0 ? -c : c);
    CHECK(g == 1);
  }
  const auto collinear_triple =
      affine_dependence(custom_polytope({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(collinear_triple.dependence == std::array<long long, 5>{-1, 2, -1, 0, 0});
  CHECK(collinear_triple.pair() == std::pair{2, 1});
  CHECK(code_of([] {
          affine_dependence(custom_polytope({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {0, 1, 0}}));
        }) == ErrorCode::DegenerateConfiguration);
}

TEST_CASE("lattice width") {
  const auto sq = width1_representative(Width1Signature::Sig22);
  const auto cert = lattice_width_certificate(sq);
  CHECK(cert.width == 1);
  long long lo = dot(cert.direction, sq.points[0]), hi = lo;
  for (auto p : sq.points) {
    lo = std::min(lo, dot(cert.direction, p));
    hi = std::max(hi, dot(cert.direction, p));
  }
  CHECK(hi - lo == 1);
  CHECK(lattice_width(width2_representative(1)) == 2);
  CHECK(lattice_width(custom_polytope({{4, 5, 6}})) == 0);
  for (int row = 1; row <= 9; ++row) CHECK(lattice_width(width2_representative(row)) == 2);
  CHECK(lattice_width(empty_tetrahedron(3, 7)) == 1);
}

TEST_CASE("translation preserves width and volume") {
  AffineUnimodularMap shift = AffineUnimodularMap::identity();
  shift.b = {1, 1, 1};
  for (int row = 1; row <= 9; ++row) {
    const auto P = width2_representative(row);
    CHECK(lattice_width(apply_map(shift, P)) == lattice_width(P));
  }
  const auto T = empty_tetrahedron(2, 5);
  const auto U = apply_map(shift, T);
  CHECK(U.family == Family::Custom);
  CHECK(normalized_volume_tetra(U.points[0], U.points[1], U.points[2], U.points[3]) == 5);
  CHECK(apply_map(AffineUnimodularMap::identity(), T).points == T.points);
}

TEST_CASE("normalized volume") {
  CHECK(normalized_volume_tetra({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}) == 1);
  CHECK(normalized_volume_tetra({0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}) == 0);
}

TEST_CASE("white_canonical") {
  CHECK(white_canonical(5, 7) == 2);
  CHECK(white_canonical(6, 7) == 1);
  CHECK(white_canonical(0, 1) == 0);
  CHECK(code_of([] { white_canonical(2, 4); }) == ErrorCode::InvalidParams);
  for (int t = 1; t <= 20; ++t)
    for (int s = 0; s < t; ++s) {
      if (std::gcd(s, t) != 1) continue;
      const int c = white_canonical(s, t);
      CHECK(white_canonical(c, t) == c);
      for (int o : white_orbit(s, t)) CHECK(white_canonical(o, t) == c);
    }
}

TEST_CASE("white_equivalence_map examples") {
  const auto id = white_equivalence_map(3, 3, 7);
  REQUIRE(id.has_value());
  CHECK(id->M == AffineUnimodularMap::identity().M);
  CHECK(id->b == Point3{0, 0, 0});

  const auto c2 = white_equivalence_map(3, 5, 7);
  REQUIRE(c2.has_value());
  CHECK(c2->M == std::array<std::array<long long, 3>, 3>{{{3, -2, 0}, {7, -5, 0}, {0, 0, -1}}});
  CHECK(c2->b == Point3{0, 0, 1});
  CHECK(as_set(apply_map(*c2, empty_tetrahedron(5, 7)).points) == as_set(empty_tetrahedron(3, 7).points));

  CHECK_FALSE(white_equivalence_map(1, 2, 5).has_value());
  CHECK(code_of([] { white_equivalence_map(2, 1, 4); }) == ErrorCode::InvalidParams);
}

TEST_CASE("white maps preserve normalized volume") {
  for (int t = 2; t <= 15; ++t)
    for (int s1 = 0; s1 < t; ++s1)
      for (int s2 = 0; s2 < t; ++s2) {
        if (std::gcd(s1, t) != 1 || std::gcd(s2, t) != 1) continue;
        const auto f = white_equivalence_map(s1, s2, t);
        if (!f) continue;
        const auto img = apply_map(*f, empty_tetrahedron(s2, t)).points;
        CHECK(normalized_volume_tetra(img[0], img[1], img[2], img[3]) == t);
      }
}

TEST_CASE("polytope spec grammar round trips") {
  for (const char* text : {"T(1,2)", "P21(1,3)", "P22", "P31", "P32(2,5)", "W2:4", "E:3"}) {
    CAPTURE(text);
    CHECK(to_spec_string(parse_polytope_spec(text)) == text);
  }
  const auto custom = parse_polytope_spec("[(0,0,0);(1,0,0);(0,-1,2)]");
  CHECK(custom.family == Family::Custom);
  CHECK(custom.points == std::vector<Point3>{{0, 0, 0}, {1, 0, 0}, {0, -1, 2}});
  CHECK(parse_polytope_spec(to_spec_string(custom)).points == custom.points);
  CHECK(parse_polytope_spec(" T( 3 , 7 ) ").points == empty_tetrahedron(3, 7).points);
  for (const char* bad : {"", "T(1)", "Q(1,2)", "T(1,2", "[(0,0)]", "W2:", "P22x"}) {
    CAPTURE(bad);
    CHECK(code_of([&] { parse_polytope_spec(bad); }) == ErrorCode::ParseError);
  }
  CHECK(code_of([] { parse_polytope_spec("T(2,4)"); }) == ErrorCode::InvalidParams);
}
