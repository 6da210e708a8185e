#include "toric3/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>

#include "toric3/error.hpp"

namespace toric3 {
namespace {

long long mod_floor(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

long long inverse_mod(long long a, long long n) {
  long long r0 = n, r1 = mod_floor(a, n), s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long k = r0 / r1;
    long long r2 = r0 - k * r1;
    r0 = r1;
    r1 = r2;
    long long s2 = s0 - k * s1;
    s0 = s1;
    s1 = s2;
  }
  return mod_floor(s0, n);
}

void require_white_params(long long s, long long t) {
  if (t < 1 || std::gcd(s, t) != 1)
    throw Error(ErrorCode::InvalidParams,
                "need t >= 1 and gcd(s,t) = 1, got s=" + std::to_string(s) + " t=" + std::to_string(t));
}

long long det4(const std::array<std::array<long long, 4>, 4>& a) {
  long long total = 0;
  for (int c = 0; c < 4; ++c) {
    std::array<Point3, 3> minor;
    for (int r = 1; r < 4; ++r) {
      std::array<long long, 3> row{};
      int k = 0;
      for (int cc = 0; cc < 4; ++cc)
        if (cc != c) row[static_cast<std::size_t>(k++)] = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)];
      minor[static_cast<std::size_t>(r - 1)] = {row[0], row[1], row[2]};
    }
    long long sign = (c % 2 == 0) ? 1 : -1;
    total += sign * a[0][static_cast<std::size_t>(c)] * det3(minor[0], minor[1], minor[2]);
  }
  return total;
}

// Affine rank of a point set (0 for a single point, 3 for full-dimensional)
// together with a basis of edge vectors from points[0].
int affine_rank(const std::vector<Point3>& pts, std::vector<Point3>* basis = nullptr) {
  std::vector<Point3> chosen;
  for (std::size_t i = 1; i < pts.size() && chosen.size() < 3; ++i) {
    Point3 e = pts[i] - pts[0];
    bool independent = false;
    if (chosen.empty()) {
      independent = e != Point3{};
    } else if (chosen.size() == 1) {
      independent = cross(chosen[0], e) != Point3{};
    } else {
      independent = det3(chosen[0], chosen[1], e) != 0;
    }
    if (independent) chosen.push_back(e);
  }
  if (basis) *basis = chosen;
  return static_cast<int>(chosen.size());
}

Point3 primitive(Point3 u) {
  long long g = std::gcd(std::gcd(std::llabs(u.x), std::llabs(u.y)), std::llabs(u.z));
  if (g == 0) return u;
  u = {u.x / g, u.y / g, u.z / g};
  if (u.x < 0 || (u.x == 0 && (u.y < 0 || (u.y == 0 && u.z < 0)))) u = {-u.x, -u.y, -u.z};
  return u;
}

long long spread(const std::vector<Point3>& pts, Point3 u) {
  long long lo = std::numeric_limits<long long>::max();
  long long hi = std::numeric_limits<long long>::min();
  for (const auto& p : pts) {
    long long v = dot(u, p);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::EmptyTetra: return "T";
    case Family::Sig21: return "P21";
    case Family::Sig22: return "P22";
    case Family::Sig31: return "P31";
    case Family::Sig32: return "P32";
    case Family::Width2Row: return "W2";
    case Family::EmbeddedPolygon: return "E";
    case Family::Custom: return "CUSTOM";
  }
  return "?";
}

LatticePolytope custom_polytope(std::vector<Point3> points) {
  std::set<Point3> seen(points.begin(), points.end());
  if (seen.size() != points.size()) throw Error(ErrorCode::InvalidParams, "polytope points must be pairwise distinct");
  LatticePolytope P;
  P.points = std::move(points);
  return P;
}

LatticePolytope empty_tetrahedron(int s, int t) {
  require_white_params(s, t);
  LatticePolytope P;
  P.points = {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {s, t, 1}};
  P.family = Family::EmptyTetra;
  P.s = s;
  P.t = t;
  return P;
}

LatticePolytope width1_representative(Width1Signature sig, int s, int t) {
  LatticePolytope P;
  switch (sig) {
    case Width1Signature::Sig21:
      if (t < 1 || s < 0 || 2 * s > t || std::gcd(s, t) != 1)
        throw Error(ErrorCode::InvalidParams, "P21(s,t) needs 0 <= s <= t/2, gcd(s,t) = 1");
      P.points = {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {-1, 0, 0}, {s, t, 1}};
      P.family = Family::Sig21;
      P.s = s;
      P.t = t;
      break;
    case Width1Signature::Sig22:
      P.points = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}};
      P.family = Family::Sig22;
      break;
    case Width1Signature::Sig31:
      P.points = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}};
      P.family = Family::Sig31;
      break;
    case Width1Signature::Sig32:
      if (s < 1 || s > t || std::gcd(s, t) != 1)
        throw Error(ErrorCode::InvalidParams, "P32(s,t) needs 0 < s <= t, gcd(s,t) = 1");
      P.points = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {s, t, 1}};
      P.family = Family::Sig32;
      P.s = s;
      P.t = t;
      break;
  }
  return P;
}

std::optional<Width1Signature> width1_signature_of(Family f) {
  switch (f) {
    case Family::Sig21: return Width1Signature::Sig21;
    case Family::Sig22: return Width1Signature::Sig22;
    case Family::Sig31: return Width1Signature::Sig31;
    case Family::Sig32: return Width1Signature::Sig32;
    default: return std::nullopt;
  }
}

LatticePolytope width2_representative(int row) {
  static const std::array<std::array<Point3, 5>, 9> kRows{{
      {{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {1, 2, 3}}},
      {{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {1, 1, 1}, {-2, -1, -2}}},
      {{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {1, 2, 1}, {-1, -1, -1}}},
      {{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {1, 3, 1}, {-1, -2, -1}}},
      {{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {2, 5, 1}, {-1, -2, -1}}},
      {{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {2, 5, 1}, {-1, -1, -1}}},
      {{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {2, 7, 1}, {-1, -2, -1}}},
      {{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {3, 7, 1}, {-2, -3, -1}}},
      {{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {2, 5, 1}, {-3, -5, -2}}},
  }};
  if (row < 1 || row > 9) throw Error(ErrorCode::OutOfRange, "width-2 row must be in 1..9");
  LatticePolytope P;
  const auto& r = kRows[static_cast<std::size_t>(row - 1)];
  P.points.assign(r.begin(), r.end());
  P.family = Family::Width2Row;
  P.index = row;
  return P;
}

LatticePolytope embedded_polygon(int i) {
  LatticePolytope P;
  switch (i) {
    case 1: P.points = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}}; break;
    case 2: P.points = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}}; break;
    case 3: P.points = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}; break;
    case 4: P.points = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {-1, -1, 0}}; break;
    default: throw Error(ErrorCode::OutOfRange, "embedded polygon index must be in 1..4");
  }
  P.family = Family::EmbeddedPolygon;
  P.index = i;
  return P;
}

Signature affine_dependence(const LatticePolytope& P) {
  if (P.size() != 5) throw Error(ErrorCode::DegenerateConfiguration, "affine dependence needs exactly 5 points");
  Signature sig;
  for (std::size_t k = 0; k < 5; ++k) {
    std::array<std::array<long long, 4>, 4> m{};
    std::size_t col = 0;
    for (std::size_t j = 0; j < 5; ++j) {
      if (j == k) continue;
      const auto& p = P.points[j];
      m[0][col] = 1;
      m[1][col] = p.x;
      m[2][col] = p.y;
      m[3][col] = p.z;
      ++col;
    }
    sig.volumes[k] = (k % 2 == 0 ? 1 : -1) * det4(m);
  }
  long long g = 0;
  for (auto v : sig.volumes) g = std::gcd(g, std::llabs(v));
  if (g == 0) throw Error(ErrorCode::DegenerateConfiguration, "points do not affinely span R^3");

  auto first = std::find_if(sig.volumes.begin(), sig.volumes.end(), [](long long v) { return v != 0; });
  if (*first > 0)
    for (auto& v : sig.volumes) v = -v;
  for (std::size_t k = 0; k < 5; ++k) {
    sig.dependence[k] = sig.volumes[k] / g;
    if (sig.volumes[k] > 0) ++sig.pos;
    if (sig.volumes[k] < 0) ++sig.neg;
  }
  return sig;
}

WidthCertificate lattice_width_certificate(const LatticePolytope& P) {
  if (P.points.empty()) throw Error(ErrorCode::InvalidParams, "lattice width of an empty point set");
  const auto& pts = P.points;
  std::vector<Point3> basis;
  int rank = affine_rank(pts, &basis);
  if (rank < 3) {
    // contained in a lattice plane: any integer normal of that plane has spread 0
    Point3 n{0, 0, 1};
    if (rank == 2) {
      n = cross(basis[0], basis[1]);
    } else if (rank == 1) {
      const Point3 e = basis[0];
      for (Point3 cand : {Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}}) {
        n = cross(e, cand);
        if (n != Point3{}) break;
      }
    }
    return {0, primitive(n)};
  }

  long long best = std::numeric_limits<long long>::max();
  Point3 best_dir;
  long long axis_spread = 0;
  for (Point3 e : {Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}}) {
    long long w = spread(pts, e);
    axis_spread = std::max(axis_spread, w);
    if (w < best) {
      best = w;
      best_dir = e;
    }
  }

  // Any u with spread <= best satisfies |<u, e_i>| <= best on the edge basis
  // E, so u = E^{-1} v is bounded by |adj(E)| * best / |det E|.
  const Point3 a = basis[0], b = basis[1], c = basis[2];
  const long long det = det3(a, b, c);
  const std::array<Point3, 3> adj_cols{cross(b, c), cross(c, a), cross(a, b)};
  long long certified = 0;
  for (int j = 0; j < 3; ++j) {
    long long row_sum = 0;
    for (const auto& col : adj_cols) {
      long long entry = j == 0 ? col.x : (j == 1 ? col.y : col.z);
      row_sum += std::llabs(entry);
    }
    certified = std::max(certified, row_sum * best / std::llabs(det));
  }
  const long long box = std::max(1 + axis_spread, certified);

  for (long long x = 0; x <= box; ++x) {
    for (long long y = (x == 0 ? 0 : -box); y <= box; ++y) {
      for (long long z = (x == 0 && y == 0 ? 1 : -box); z <= box; ++z) {
        Point3 u{x, y, z};
        long long w = spread(pts, u);
        if (w < best) {
          best = w;
          best_dir = u;
        }
      }
    }
  }
  return {best, primitive(best_dir)};
}

long long lattice_width(const LatticePolytope& P) { return lattice_width_certificate(P).width; }

long long normalized_volume_tetra(Point3 p0, Point3 p1, Point3 p2, Point3 p3) {
  return std::llabs(det3(p1 - p0, p2 - p0, p3 - p0));
}

std::vector<Point3> lattice_points_in_hull(const std::vector<Point3>& points) {
  if (affine_rank(points) < 3)
    throw Error(ErrorCode::DegenerateConfiguration, "hull scan needs a full-dimensional point set");

  // Supporting planes through triples of input points: n.x <= c for all x
  // in the hull. Facet planes are among them, so together they cut out the
  // hull exactly.
  struct HalfSpace {
    Point3 n;
    long long c;
  };
  std::vector<HalfSpace> halfspaces;
  const std::size_t k = points.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l) {
        Point3 n = cross(points[j] - points[i], points[l] - points[i]);
        if (n == Point3{}) continue;
        bool above = false, below = false;
        for (const auto& p : points) {
          long long v = dot(n, p - points[i]);
          above |= v > 0;
          below |= v < 0;
        }
        if (above && below) continue;
        if (above) n = Point3{} - n;
        halfspaces.push_back({n, dot(n, points[i])});
      }

  Point3 lo = points[0], hi = points[0];
  for (const auto& p : points) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  std::vector<Point3> inside;
  for (long long x = lo.x; x <= hi.x; ++x)
    for (long long y = lo.y; y <= hi.y; ++y)
      for (long long z = lo.z; z <= hi.z; ++z) {
        Point3 p{x, y, z};
        bool ok = std::all_of(halfspaces.begin(), halfspaces.end(),
                              [&](const HalfSpace& h) { return dot(h.n, p) <= h.c; });
        if (ok) inside.push_back(p);
      }
  return inside;
}

AffineUnimodularMap AffineUnimodularMap::identity() {
  AffineUnimodularMap f;
  f.M = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  return f;
}

long long AffineUnimodularMap::det() const {
  return det3({M[0][0], M[0][1], M[0][2]}, {M[1][0], M[1][1], M[1][2]}, {M[2][0], M[2][1], M[2][2]});
}

Point3 AffineUnimodularMap::apply(Point3 p) const {
  return {M[0][0] * p.x + M[0][1] * p.y + M[0][2] * p.z + b.x,
          M[1][0] * p.x + M[1][1] * p.y + M[1][2] * p.z + b.y,
          M[2][0] * p.x + M[2][1] * p.y + M[2][2] * p.z + b.z};
}

AffineUnimodularMap AffineUnimodularMap::after(const AffineUnimodularMap& first) const {
  AffineUnimodularMap out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) out.M[i][j] += M[i][k] * first.M[k][j];
  out.b = apply(first.b);
  return out;
}

LatticePolytope apply_map(const AffineUnimodularMap& f, const LatticePolytope& P) {
  LatticePolytope out;
  out.points.reserve(P.size());
  for (const auto& p : P.points) out.points.push_back(f.apply(p));
  return out;
}

std::vector<int> white_orbit(int s, int t) {
  require_white_params(s, t);
  if (t == 1) return {0};
  const long long r = mod_floor(s, t);
  const long long inv = inverse_mod(r, t);
  std::set<int> orbit{static_cast<int>(r), static_cast<int>(mod_floor(-r, t)), static_cast<int>(inv),
                      static_cast<int>(mod_floor(-inv, t))};
  return {orbit.begin(), orbit.end()};
}

int white_canonical(int s, int t) { return white_orbit(s, t).front(); }

std::optional<AffineUnimodularMap> white_equivalence_map(int s1, int s2, int t) {
  require_white_params(s1, t);
  require_white_params(s2, t);
  const long long a = s1, b = s2, T = t;

  // Case 1: shear (x, y, z) -> (x + (s1 - s2)/t * y, y, z)
  auto shear = [&](long long to, long long from) {
    AffineUnimodularMap f = AffineUnimodularMap::identity();
    f.M[0][1] = (to - from) / T;
    return f;
  };
  // Case 2: to * from = 1 (mod t)
  auto inversion = [&](long long to, long long from) {
    AffineUnimodularMap f;
    f.M = {{{to, (1 - to * from) / T, 0}, {T, -from, 0}, {0, 0, -1}}};
    f.b = {0, 0, 1};
    return f;
  };
  // Case 3: to = -from (mod t)
  auto reflection = [&](long long to, long long from) {
    AffineUnimodularMap f;
    f.M = {{{-1, (to + from) / T, -1}, {0, 1, 0}, {0, 0, 1}}};
    f.b = {1, 0, 0};
    return f;
  };

  if (mod_floor(a - b, T) == 0) return shear(a, b);
  if (mod_floor(a * b - 1, T) == 0) return inversion(a, b);
  if (mod_floor(a + b, T) == 0) return reflection(a, b);
  if (mod_floor(a * b + 1, T) == 0) {
    // Case 4: T(s2) -> T(-s1) by case 2, then T(-s1) -> T(s1) by case 3
    return reflection(a, -a).after(inversion(-a, b));
  }
  return std::nullopt;
}

}  // namespace toric3
