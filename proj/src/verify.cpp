#include "toric3/verify.hpp"

#include <chrono>
#include <exception>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "toric3/classifier.hpp"
#include "toric3/error.hpp"
#include "toric3/formulas.hpp"
#include "toric3/galois.hpp"
#include "toric3/polytope.hpp"
#include "toric3/toric_code.hpp"

namespace toric3 {
namespace {

template <typename Body>
CheckResult run_check(int criterion, std::string name, Body body) {
  CheckResult r;
  r.criterion = criterion;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = r.failures.empty();
  return r;
}

std::string gf(long long q) { return "GF(" + std::to_string(q) + ")"; }

FieldSpec field_of(long long q) { return make_field(static_cast<int>(q)); }

std::vector<LatticePolytope> all_census_polytopes(long long q) {
  auto out = census_polytopes(q, CensusKind::Dim4);
  if (q >= 5) {
    auto more = census_polytopes(q, CensusKind::Dim5Width1);
    out.insert(out.end(), more.begin(), more.end());
    for (int i = 1; i <= 4; ++i) out.push_back(embedded_polygon(i));
  }
  return out;
}

template <std::size_t N>
bool equal_up_to_sign(const std::array<long long, N>& a, const std::array<long long, N>& b) {
  bool same = true, flipped = true;
  for (std::size_t i = 0; i < N; ++i) {
    same = same && a[i] == b[i];
    flipped = flipped && a[i] == -b[i];
  }
  return same || flipped;
}

std::string format_vec(const std::array<long long, 5>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

bool in_white_relation(int s1, int s2, int t) {
  // direct residue search, independent of the orbit helpers
  const int a = ((s1 % t) + t) % t;
  for (int sign : {1, -1}) {
    const int b = (((sign * s2) % t) + t) % t;
    if (a == b) return true;
    for (int x = 0; x < t; ++x)
      if ((x * b) % t == 1 % t && x == a) return true;
  }
  return false;
}

}  // namespace

CheckResult check_dim4_formulas(long long q, const VerifyOptions& opts) {
  return run_check(1, "dim-4 formula vs brute force " + gf(q), [&](CheckResult& r) {
    const FieldSpec field = field_of(q);
    const auto polys = census_polytopes(q, CensusKind::Dim4);
    for (const auto& P : polys) {
      const long long brute = min_distance_brute(build_code(field, P), opts.threads).lower;
      const long long formula = dim4_distance(q, *P.t).lower;
      if (brute != formula)
        r.failures.push_back(gf(q) + " " + to_spec_string(P) + ": brute " + std::to_string(brute) + ", formula " +
                             std::to_string(formula));
    }
    r.summary = std::to_string(polys.size()) + " codes";
  });
}

CheckResult check_dim5_formulas(long long q, const VerifyOptions& opts) {
  return run_check(2, "dim-5 width-1 formulas " + gf(q), [&](CheckResult& r) {
    const FieldSpec field = field_of(q);
    const auto polys = census_polytopes(q, CensusKind::Dim5Width1);
    for (const auto& P : polys) {
      const long long brute = min_distance_brute(build_code(field, P), opts.threads).lower;
      const DistanceResult f = *formula_distance(P, q);
      bool ok = false;
      switch (P.family) {
        case Family::Sig21:
        case Family::Sig22: ok = brute == f.lower; break;
        case Family::Sig31: ok = brute >= f.lower; break;
        default: ok = f.contains(brute); break;
      }
      if (!ok)
        r.failures.push_back(gf(q) + " " + to_spec_string(P) + ": brute " + std::to_string(brute) + ", formula [" +
                             std::to_string(f.lower) + ", " + std::to_string(f.upper) + "]");
    }
    r.summary = std::to_string(polys.size()) + " codes";
  });
}

CheckResult check_degenerate(long long q, const VerifyOptions& opts) {
  return run_check(3, "degenerate distances and product law " + gf(q), [&](CheckResult& r) {
    const FieldSpec field = field_of(q);
    std::ostringstream summary;
    for (int i = 1; i <= 4; ++i) {
      const auto P = embedded_polygon(i);
      const long long d3 = min_distance_brute(build_code(field, P, 3), opts.threads).lower;
      const long long d2 = min_distance_brute(build_code(field, P, 2), opts.threads).lower;
      const DistanceResult f = degenerate_distance(i, q);
      const std::string tag = gf(q) + " E:" + std::to_string(i);
      if (i <= 3 && d3 != f.lower)
        r.failures.push_back(tag + ": brute " + std::to_string(d3) + ", formula " + std::to_string(f.lower));
      if (i == 4 && d3 < f.lower)
        r.failures.push_back(tag + ": brute " + std::to_string(d3) + " does not exceed the bound (needs >= " +
                             std::to_string(f.lower) + ")");
      if (d3 != (q - 1) * d2)
        r.failures.push_back(tag + ": 3D distance " + std::to_string(d3) + " != (q-1) x 2D distance " +
                             std::to_string(d2));
      summary << (i > 1 ? ", " : "") << "E:" << i << "=" << d3;
    }
    r.summary = summary.str();
  });
}

CheckResult check_concordance(long long q, const VerifyOptions& opts) {
  return run_check(4, "classification concordance " + gf(q), [&](CheckResult& r) {
    std::ostringstream summary;
    std::vector<CensusKind> kinds{CensusKind::Dim4};
    if (q >= 5) kinds.push_back(CensusKind::Dim5Width1);
    for (auto kind : kinds) {
      const auto res = census_report(q, kind, {opts.threads});
      int classes = 0;
      for (const auto& row : res.rows) classes = std::max(classes, row.class_id + 1);
      summary << (kind == CensusKind::Dim4 ? "dim 4: " : "; dim 5: ") << res.rows.size() << " codes, " << classes
              << " classes, " << res.mismatches.size() << " mismatches";
      r.failures.insert(r.failures.end(), res.mismatches.begin(), res.mismatches.end());
    }
    r.summary = summary.str();
  });
}

CheckResult check_spot_case(long long q, const VerifyOptions& opts) {
  return run_check(4, "spot case " + gf(q), [&](CheckResult& r) {
    int t = 0, s1 = 1, s2 = 0;
    Status expected = Status::Equivalent;
    if (q == 7) {
      t = 4;
      s2 = 3;
    } else if (q == 13) {
      t = 9;
      s2 = 2;
      expected = Status::Inequivalent;
    } else {
      throw Error(ErrorCode::InvalidParams, "no spot pair over " + gf(q));
    }
    const FieldSpec field = field_of(q);
    const auto A = empty_tetrahedron(s1, t);
    const auto B = empty_tetrahedron(s2, t);
    const std::string tag = gf(q) + " " + to_spec_string(A) + " vs " + to_spec_string(B);
    const auto theorem = dim4_theorem_verdict(q, s1, t, s2, t);
    ProfiledCode a(build_code(field, A)), b(build_code(field, B));
    const auto witness = witness_equivalence(a, b);
    if (theorem.status != expected)
      r.failures.push_back(tag + ": theorem says " + theorem.describe());
    if (witness.status != expected)
      r.failures.push_back(tag + ": witness test says " + witness.describe());
    if (expected == Status::Inequivalent && a.enumerator(opts.threads) == b.enumerator(opts.threads))
      r.failures.push_back(tag + ": weight enumerators are identical");
    r.summary = tag + ": theorem " + std::string(to_string(theorem.status)) + ", witness " +
                std::string(to_string(witness.status));
  });
}

CheckResult check_white_orbits(int tmax) {
  return run_check(5, "White orbits t <= " + std::to_string(tmax), [&](CheckResult& r) {
    std::size_t maps = 0;
    for (int t = 1; t <= tmax; ++t) {
      std::vector<int> residues;
      for (int s = 0; s < t; ++s)
        if (std::gcd(s, t) == 1) residues.push_back(s);
      for (int s1 : residues) {
        for (int s2 : residues) {
          const std::string tag = "t=" + std::to_string(t) + " s1=" + std::to_string(s1) + " s2=" + std::to_string(s2);
          const bool related = in_white_relation(s1, s2, t);
          const auto f = white_equivalence_map(s1, s2, t);
          if (f.has_value() != related) {
            r.failures.push_back(tag + ": map " + (f ? "returned" : "missing"));
            continue;
          }
          if ((white_canonical(s1, t) == white_canonical(s2, t)) != related)
            r.failures.push_back(tag + ": canonical forms disagree with the orbit relation");
          if (!f) continue;
          ++maps;
          if (f->det() != 1 && f->det() != -1) r.failures.push_back(tag + ": det " + std::to_string(f->det()));
          const auto image = apply_map(*f, empty_tetrahedron(s2, t)).points;
          const auto target = empty_tetrahedron(s1, t).points;
          if (std::set<Point3>(image.begin(), image.end()) != std::set<Point3>(target.begin(), target.end()))
            r.failures.push_back(tag + ": image is not the vertex set of T(s1,t)");
        }
      }
    }
    if (tmax >= 7) {
      std::set<std::vector<int>> orbits;
      for (int s = 1; s < 7; ++s) orbits.insert(white_orbit(s, 7));
      if (orbits != std::set<std::vector<int>>{{1, 6}, {2, 3, 4, 5}})
        r.failures.push_back("t=7: orbits are not {1,6}, {2,3,4,5}");
    }
    r.summary = std::to_string(maps) + " maps certified";
  });
}

CheckResult check_structural(long long q, const VerifyOptions& opts) {
  return run_check(6, "structural invariants " + gf(q), [&](CheckResult& r) {
    const FieldSpec field = field_of(q);
    const auto polys = all_census_polytopes(q);
    std::mt19937 rng(20240101);
    for (const auto& P : polys) {
      const auto code = build_code(field, P);
      const std::string tag = gf(q) + " " + to_spec_string(P);
      const std::size_t n = code.length();
      const std::size_t k = code.dimension();

      const ZeroSearch zs = search_max_zeros(code, opts.threads);
      const std::size_t w = min_codeword_weight(code, opts.threads);
      const WeightEnumerator en = weight_enumerator(code, opts.threads);
      const std::size_t w_enum = std::next(en.begin()) == en.end() ? 0 : std::next(en.begin())->first;
      if (n - zs.max_zeros != w || w != w_enum)
        r.failures.push_back(tag + ": n - max_zeros = " + std::to_string(n - zs.max_zeros) + ", min weight " +
                             std::to_string(w) + ", enumerator " + std::to_string(w_enum));

      std::uint64_t total = 0, qk = 1;
      for (std::size_t i = 0; i < k; ++i) qk *= static_cast<std::uint64_t>(q);
      for (const auto& [weight, count] : en) {
        total += count;
        if (weight != 0 && count % static_cast<std::uint64_t>(q - 1) != 0)
          r.failures.push_back(tag + ": A_" + std::to_string(weight) + " not divisible by q-1");
      }
      if (en.begin()->first != 0 || en.begin()->second != 1 || total != qk)
        r.failures.push_back(tag + ": enumerator does not count q^k codewords with one zero word");

      std::vector<std::vector<FieldElement>> samples{zs.maximizer};
      std::uniform_int_distribution<int> coeff(0, static_cast<int>(q) - 1);
      for (int i = 0; i < 6; ++i) {
        std::vector<FieldElement> u(k);
        for (auto& c : u) c = field.from_int(coeff(rng));
        if (std::any_of(u.begin(), u.end(), [](FieldElement e) { return !e.is_zero(); })) samples.push_back(u);
      }
      for (const auto& u : samples) {
        const std::size_t z = count_zeros(code, u);
        for (int c = 0; c < field.unit_order(); ++c) {
          std::vector<FieldElement> cu(u);
          for (auto& e : cu) e = field.mul(e, field.exp(c));
          if (count_zeros(code, cu) != z) {
            r.failures.push_back(tag + ": zero count changes under scaling by alpha^" + std::to_string(c));
            break;
          }
        }
      }

      if (P.family == Family::EmptyTetra || P.family == Family::Sig21) {
        const auto part = column_partition(code);
        const long long g = std::gcd(part.t, q - 1);
        std::map<std::pair<int, int>, long long> per_plane;
        std::size_t covered = 0;
        for (const auto& [key, cols] : part.cells) {
          covered += cols.size();
          if (static_cast<long long>(cols.size()) != g)
            r.failures.push_back(tag + ": cell of size " + std::to_string(cols.size()) + ", expected " +
                                 std::to_string(g));
          ++per_plane[{key[0], key[1]}];
        }
        for (const auto& [plane, count] : per_plane)
          if (count != (q - 1) / g) r.failures.push_back(tag + ": wrong number of A-values in a plane");
        if (covered != n) r.failures.push_back(tag + ": partition does not cover all columns");
      }
    }
    r.summary = std::to_string(polys.size()) + " codes";
  });
}

CheckResult check_tables() {
  return run_check(7, "table fidelity", [&](CheckResult& r) {
    std::size_t rows = 0;
    auto expect = [&](const LatticePolytope& P, std::array<long long, 5> volume, std::pair<int, int> sig,
                      long long width) {
      ++rows;
      const auto dep = affine_dependence(P);
      const std::string tag = to_spec_string(P);
      if (!equal_up_to_sign(dep.volumes, volume))
        r.failures.push_back(tag + ": volumes " + format_vec(dep.volumes) + ", table " + format_vec(volume));
      if (dep.pair() != sig) r.failures.push_back(tag + ": wrong signature");
      const long long wd = lattice_width(P);
      if (wd != width) r.failures.push_back(tag + ": width " + std::to_string(wd) + ", table " + std::to_string(width));
    };
    for (int t = 1; t <= 12; ++t)
      for (int s = 0; 2 * s <= t; ++s)
        if (std::gcd(s, t) == 1)
          expect(width1_representative(Width1Signature::Sig21, s, t), {-2LL * t, t, 0, t, 0}, {2, 1}, 1);
    expect(width1_representative(Width1Signature::Sig22), {-1, 1, 1, -1, 0}, {2, 2}, 1);
    expect(width1_representative(Width1Signature::Sig31), {-3, 1, 1, 1, 0}, {3, 1}, 1);
    for (int t = 1; t <= 12; ++t)
      for (int s = 1; s <= t; ++s)
        if (std::gcd(s, t) == 1)
          expect(width1_representative(Width1Signature::Sig32, s, t), {-s - t, s, t, 1, -1}, {3, 2}, 1);

    static const std::array<std::array<long long, 5>, 9> kVolumes{{
        {-9, 3, 3, 3, 0},
        {-4, 1, 1, 1, 1},
        {-5, 1, 1, 1, 2},
        {-7, 1, 1, 2, 3},
        {-11, 1, 3, 2, 5},
        {-13, 3, 4, 1, 5},
        {-17, 3, 5, 2, 7},
        {-19, 5, 4, 3, 7},
        {-20, 5, 5, 5, 5},
    }};
    for (int row = 1; row <= 9; ++row)
      expect(width2_representative(row), kVolumes[static_cast<std::size_t>(row - 1)],
             row == 1 ? std::pair{3, 1} : std::pair{4, 1}, 2);
    r.summary = std::to_string(rows) + " representatives";
  });
}

std::vector<CheckResult> verify_field(long long q, const VerifyOptions& opts) {
  if (!prime_power(q)) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  field_of(q);
  std::vector<CheckResult> out;
  out.push_back(check_dim4_formulas(q, opts));
  if (q >= 5) {
    out.push_back(check_dim5_formulas(q, opts));
    out.push_back(check_degenerate(q, opts));
  }
  out.push_back(check_concordance(q, opts));
  if (q == 7 || q == 13) out.push_back(check_spot_case(q, opts));
  out.push_back(check_structural(q, opts));
  return out;
}

std::vector<CheckResult> verify_geometry() { return {check_white_orbits(12), check_tables()}; }

}  // namespace toric3
