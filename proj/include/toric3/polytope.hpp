#pragma once

// Lattice polytopes in Z^3 with at most a handful of points: the families
// used for 4- and 5-point toric codes, affine dependences ("signatures"),
// lattice width, and the explicit affine unimodular maps realizing White's
// classification of empty tetrahedra.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toric3 {

struct Point3 {
  long long x = 0;
  long long y = 0;
  long long z = 0;

  friend constexpr auto operator<=>(const Point3&, const Point3&) = default;
  friend constexpr Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
};

constexpr long long dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Point3 cross(Point3 a, Point3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
constexpr long long det3(Point3 a, Point3 b, Point3 c) { return dot(a, cross(b, c)); }

enum class Family {
  EmptyTetra,       // T(s,t)
  Sig21,            // width-1, signature (2,1), params (s,t)
  Sig22,            // width-1, signature (2,2)
  Sig31,            // width-1, signature (3,1)
  Sig32,            // width-1, signature (3,2), params (s,t)
  Width2Row,        // width-2 table row 1..9
  EmbeddedPolygon,  // 4-point polygon i = 1..4 placed in z = 0
  Custom,
};

std::string_view family_name(Family f);

enum class Width1Signature { Sig21, Sig22, Sig31, Sig32 };

/// Ordered lattice points plus the family metadata they came from. The point
/// order is significant: it fixes the row order of the generator matrix.
struct LatticePolytope {
  std::vector<Point3> points;
  Family family = Family::Custom;
  std::optional<int> s;
  std::optional<int> t;
  int index = 0;  // table row for Width2Row, polygon number for EmbeddedPolygon

  std::size_t size() const { return points.size(); }
};

/// Points must be pairwise distinct (InvalidParams otherwise).
LatticePolytope custom_polytope(std::vector<Point3> points);

/// T(s,t) = Conv{(0,0,0),(1,0,0),(0,0,1),(s,t,1)} with t >= 1, gcd(s,t) = 1.
LatticePolytope empty_tetrahedron(int s, int t);

/// Width-1 five-point representatives. (2,1) needs 0 <= 2s <= t, (3,2)
/// needs 0 < s <= t, both with gcd(s,t) = 1; (2,2) and (3,1) ignore s,t.
LatticePolytope width1_representative(Width1Signature sig, int s = 0, int t = 0);
std::optional<Width1Signature> width1_signature_of(Family f);

/// Width-2 five-point representatives, rows 1..9.
LatticePolytope width2_representative(int row);

/// The four 4-point lattice polygons (line segment, triangle with a
/// segment, unit square, exceptional triangle) placed in the plane z = 0.
LatticePolytope embedded_polygon(int i);

struct Signature {
  int pos = 0;  // strictly positive coefficients
  int neg = 0;  // strictly negative coefficients
  /// Signed volumes of the tetra omitting each point (the cofactor vector of
  /// the homogeneous 4x5 coordinate matrix), first nonzero entry negative.
  std::array<long long, 5> volumes{};
  /// volumes divided by their gcd.
  std::array<long long, 5> dependence{};

  /// Unordered signature reported as (max, min).
  std::pair<int, int> pair() const { return {std::max(pos, neg), std::min(pos, neg)}; }
};

/// The unique (up to scale) affine dependence of five affinely spanning
/// points. Throws DegenerateConfiguration unless the kernel is 1-dimensional.
Signature affine_dependence(const LatticePolytope& P);

struct WidthCertificate {
  long long width = 0;
  Point3 direction;  // a primitive functional achieving the width
};

/// Lattice width: min over nonzero integer functionals u of
/// max<u,p> - min<u,p>. Polytopes lying in two consecutive lattice planes
/// have width 1 (the "width 1" of the five-point tables), and so on.
WidthCertificate lattice_width_certificate(const LatticePolytope& P);
long long lattice_width(const LatticePolytope& P);

/// |det(p1 - p0, p2 - p0, p3 - p0)|; 0 iff the points are coplanar.
long long normalized_volume_tetra(Point3 p0, Point3 p1, Point3 p2, Point3 p3);

/// All lattice points of Conv(points), by a bounding-box scan with exact
/// integer half-space tests. Requires a full-dimensional point set.
std::vector<Point3> lattice_points_in_hull(const std::vector<Point3>& points);

struct AffineUnimodularMap {
  std::array<std::array<long long, 3>, 3> M{};
  Point3 b;

  static AffineUnimodularMap identity();
  long long det() const;
  Point3 apply(Point3 p) const;
  /// (*this) after `first`: p -> this(first(p)).
  AffineUnimodularMap after(const AffineUnimodularMap& first) const;
};

/// Pointwise image; the result is tagged Custom.
LatticePolytope apply_map(const AffineUnimodularMap& f, const LatticePolytope& P);

/// Smallest residue in [0, t) of the orbit {s, -s, s^-1, -s^-1} mod t.
int white_canonical(int s, int t);
/// The orbit itself, sorted.
std::vector<int> white_orbit(int s, int t);

/// A map sending the vertices of T(s2,t) onto those of T(s1,t) when
/// s1 = +-s2^{+-1} (mod t), built from the four explicit cases; nullopt
/// otherwise.
std::optional<AffineUnimodularMap> white_equivalence_map(int s1, int s2, int t);

/// Grammar: T(s,t) | P21(s,t) | P22 | P31 | P32(s,t) | W2:i | E:i |
/// [(x,y,z);(x,y,z);...]. Throws ParseError (or the constructor's error).
LatticePolytope parse_polytope_spec(std::string_view text);
std::string to_spec_string(const LatticePolytope& P);

}  // namespace toric3
