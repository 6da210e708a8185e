#include "toric3/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "toric3/error.hpp"
#include "toric3/formulas.hpp"
#include "toric3/galois.hpp"

namespace toric3 {
namespace {

long long mod_floor(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

using Key = std::uint64_t;
using KeyedColumns = std::vector<std::pair<Key, std::size_t>>;

// Column vectors of G (rows taken in `rows` order) packed six bits per
// entry, optionally divided by their first entry, sorted.
KeyedColumns sorted_columns(const ToricCode& code, const std::vector<std::size_t>& rows, bool normalize) {
  const int N = code.field().unit_order();
  KeyedColumns out(code.length());
  for (std::size_t c = 0; c < code.length(); ++c) {
    const int base = normalize ? code.entry_log(rows[0], c) : 0;
    Key key = 0;
    for (std::size_t r : rows) {
      int v = code.entry_log(r, c) - base;
      if (v < 0) v += N;
      key = (key << 6) | static_cast<Key>(v);
    }
    out[c] = {key, c};
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_keys(const KeyedColumns& a, const KeyedColumns& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const auto& x, const auto& y) { return x.first == y.first; });
}

Witness make_witness(const ToricCode& c1, const ToricCode& c2, const std::vector<std::size_t>& rows,
                     const KeyedColumns& k1, const KeyedColumns& k2) {
  const int N = c1.field().unit_order();
  Witness w;
  w.row_order = rows;
  w.column_map.resize(c2.length());
  w.scale_log.resize(c2.length());
  for (std::size_t i = 0; i < k2.size(); ++i) {
    const std::size_t j2 = k2[i].second;
    const std::size_t j1 = k1[i].second;
    w.column_map[j2] = j1;
    w.scale_log[j2] = static_cast<int>(mod_floor(c2.entry_log(0, j2) - c1.entry_log(rows[0], j1), N));
  }
  return w;
}

std::string enumerator_entry(const WeightEnumerator& e, std::size_t w) {
  auto it = e.find(w);
  return "A_" + std::to_string(w) + " = " + std::to_string(it == e.end() ? 0 : it->second);
}

void require_dim4_params(long long q, int s, int t) {
  if (!prime_power(q) || q < 3) throw Error(ErrorCode::InvalidField, "q = " + std::to_string(q));
  if (t < 1 || std::gcd(s, t) != 1)
    throw Error(ErrorCode::InvalidParams, "T(" + std::to_string(s) + "," + std::to_string(t) + ") is not valid");
}

EquivalenceVerdict verdict(Status s, Criterion c) { return {s, c}; }

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Equivalent: return "EQUIVALENT";
    case Status::Inequivalent: return "INEQUIVALENT";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::IdenticalParameters: return "identical-parameters";
    case Criterion::SameSEqualGcd: return "same-s-equal-gcd";
    case Criterion::SameSDifferentGcd: return "same-s-different-gcd";
    case Criterion::SameTResidue: return "same-t-residue-mod-gcd";
    case Criterion::SameTWhiteOrbit: return "same-t-white-orbit";
    case Criterion::SameTNeither: return "same-t-neither-condition";
    case Criterion::SignaturesDiffer: return "signatures-differ";
    case Criterion::SingleClassSignature: return "single-class-signature";
    case Criterion::Sig32ParametersDiffer: return "sig32-parameters-differ";
    case Criterion::Sig21SameSEqualGcd: return "sig21-same-s-equal-gcd";
    case Criterion::Sig21SameSDifferentGcd: return "sig21-same-s-different-gcd";
    case Criterion::Sig21SameTResidue: return "sig21-same-t-residue-mod-gcd";
    case Criterion::Sig21SameTResidueDiffers: return "sig21-same-t-residue-differs";
    case Criterion::NoCriterion: return "no-criterion";
  }
  return "?";
}

bool Witness::trivial_rows() const {
  for (std::size_t r = 0; r < row_order.size(); ++r)
    if (row_order[r] != r) return false;
  return true;
}

bool Witness::trivial_scaling() const {
  return std::all_of(scale_log.begin(), scale_log.end(), [](int v) { return v == 0; });
}

std::string EquivalenceVerdict::describe() const {
  std::ostringstream os;
  os << to_string(status);
  if (const auto* c = std::get_if<Criterion>(&evidence)) {
    os << " (theorem: " << to_string(*c) << ")";
  } else if (const auto* w = std::get_if<Witness>(&evidence)) {
    os << " (witness: ";
    if (w->trivial_rows() && w->trivial_scaling()) {
      os << "column permutation, D = I";
    } else {
      os << "row relabeling [";
      for (std::size_t r = 0; r < w->row_order.size(); ++r) os << (r ? " " : "") << w->row_order[r];
      os << "], " << (w->trivial_scaling() ? "D = I" : "nontrivial D") << ", column permutation";
    }
    os << ")";
  } else if (const auto* inv = std::get_if<InvariantEvidence>(&evidence)) {
    os << " (invariant " << inv->name << ": " << inv->value_a << " vs " << inv->value_b << ")";
  }
  return os.str();
}

bool verify_witness(const ToricCode& c1, const ToricCode& c2, const Witness& w) {
  const int N = c1.field().unit_order();
  if (c1.field().q() != c2.field().q() || c1.length() != c2.length() || c1.dimension() != c2.dimension())
    return false;
  if (w.row_order.size() != c2.dimension() || w.column_map.size() != c2.length() ||
      w.scale_log.size() != c2.length())
    return false;
  std::vector<std::size_t> rows = w.row_order, cols = w.column_map;
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i] != i) return false;
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (cols[i] != i) return false;
  for (std::size_t r = 0; r < c2.dimension(); ++r)
    for (std::size_t j = 0; j < c2.length(); ++j) {
      const long long expected = c1.entry_log(w.row_order[r], w.column_map[j]) + w.scale_log[j];
      if (mod_floor(expected, N) != c2.entry_log(r, j)) return false;
    }
  return true;
}

const DistanceResult& ProfiledCode::distance(unsigned threads) const {
  if (!distance_) distance_ = min_distance_brute(code_, threads);
  return *distance_;
}

const WeightEnumerator& ProfiledCode::enumerator(unsigned threads) const {
  if (!enumerator_) enumerator_ = weight_enumerator(code_, threads);
  return *enumerator_;
}

EquivalenceVerdict witness_equivalence(const ProfiledCode& p1, const ProfiledCode& p2, const WitnessOptions& opts) {
  const ToricCode& c1 = p1.code();
  const ToricCode& c2 = p2.code();
  if (c1.field().q() != c2.field().q() || c1.length() != c2.length() || c1.dimension() != c2.dimension())
    throw Error(ErrorCode::ShapeMismatch, "codes differ in field, length or dimension");
  const std::size_t k = c1.dimension();
  std::vector<std::size_t> rows(k);
  std::iota(rows.begin(), rows.end(), 0);

  auto found = [&](Witness w) {
    if (!verify_witness(c1, c2, w)) throw std::logic_error("witness construction produced an invalid witness");
    return EquivalenceVerdict{Status::Equivalent, std::move(w)};
  };

  const auto plain2 = sorted_columns(c2, rows, false);
  const auto plain1 = sorted_columns(c1, rows, false);
  if (same_keys(plain1, plain2)) return found(make_witness(c1, c2, rows, plain1, plain2));

  if (opts.allow_relabeling) {
    const auto normal2 = sorted_columns(c2, rows, true);
    do {
      const auto normal1 = sorted_columns(c1, rows, true);
      if (same_keys(normal1, normal2)) return found(make_witness(c1, c2, rows, normal1, normal2));
    } while (std::next_permutation(rows.begin(), rows.end()));
  }

  if (opts.check_invariants) {
    const auto& d1 = p1.distance();
    const auto& d2 = p2.distance();
    if (d1.lower != d2.lower)
      return {Status::Inequivalent, InvariantEvidence{"min_distance", std::to_string(d1.lower), std::to_string(d2.lower)}};
    const auto& e1 = p1.enumerator();
    const auto& e2 = p2.enumerator();
    if (e1 != e2) {
      auto i1 = e1.begin(), i2 = e2.begin();
      while (i1 != e1.end() && i2 != e2.end() && *i1 == *i2) {
        ++i1;
        ++i2;
      }
      std::size_t w = std::min(i1 == e1.end() ? c1.length() + 1 : i1->first, i2 == e2.end() ? c2.length() + 1 : i2->first);
      return {Status::Inequivalent, InvariantEvidence{"weight_enumerator", enumerator_entry(e1, w), enumerator_entry(e2, w)}};
    }
  }
  return {Status::Inconclusive, std::monostate{}};
}

EquivalenceVerdict witness_equivalence(const ToricCode& c1, const ToricCode& c2, const WitnessOptions& opts) {
  return witness_equivalence(ProfiledCode(c1), ProfiledCode(c2), opts);
}

ColumnPartition column_partition(const ToricCode& code) {
  const auto family = code.polytope().family;
  if (family != Family::EmptyTetra && family != Family::Sig21)
    throw Error(ErrorCode::UnsupportedFamily, "column partition needs a T(s,t) or P21(s,t) code");
  const long long N = code.field().unit_order();
  ColumnPartition part;
  part.t = code.polytope().t.value();
  for (std::size_t c = 0; c < code.length(); ++c) {
    auto [i, j, l] = code.column_point(c);
    const int a = static_cast<int>(mod_floor(part.t * j, N));
    part.cells[{i, l, a}].push_back(c);
  }
  return part;
}

EquivalenceVerdict dim4_theorem_verdict(long long q, int s1, int t1, int s2, int t2) {
  require_dim4_params(q, s1, t1);
  require_dim4_params(q, s2, t2);
  if (s1 == s2 && t1 == t2) return verdict(Status::Equivalent, Criterion::IdenticalParameters);
  if (t1 == t2) {
    const long long g = std::gcd(static_cast<long long>(t1), q - 1);
    if (mod_floor(s1 - s2, g) == 0) return verdict(Status::Equivalent, Criterion::SameTResidue);
    const auto orbit = white_orbit(s2, t1);
    if (std::binary_search(orbit.begin(), orbit.end(), static_cast<int>(mod_floor(s1, t1))))
      return verdict(Status::Equivalent, Criterion::SameTWhiteOrbit);
    return verdict(Status::Inequivalent, Criterion::SameTNeither);
  }
  if (s1 == s2) {
    const bool same = std::gcd(static_cast<long long>(t1), q - 1) == std::gcd(static_cast<long long>(t2), q - 1);
    return same ? verdict(Status::Equivalent, Criterion::SameSEqualGcd)
                : verdict(Status::Inequivalent, Criterion::SameSDifferentGcd);
  }
  return verdict(Status::Inconclusive, Criterion::NoCriterion);
}

bool dim4_gcd_corollary(long long q, long long t) {
  if (t < 1) throw Error(ErrorCode::InvalidParams, "t must be >= 1");
  return std::gcd(t, q - 1) == 1;
}

EquivalenceVerdict dim5_theorem_verdict(long long q, const Width1Params& a, const Width1Params& b) {
  if (!prime_power(q) || q < 3) throw Error(ErrorCode::InvalidField, "q = " + std::to_string(q));
  width1_representative(a.sig, a.s, a.t);
  width1_representative(b.sig, b.s, b.t);
  if (a.sig != b.sig) return verdict(Status::Inequivalent, Criterion::SignaturesDiffer);
  switch (a.sig) {
    case Width1Signature::Sig22:
    case Width1Signature::Sig31:
      return verdict(Status::Equivalent, Criterion::SingleClassSignature);
    case Width1Signature::Sig32:
      if (a.s == b.s && a.t == b.t) return verdict(Status::Equivalent, Criterion::IdenticalParameters);
      return verdict(Status::Inequivalent, Criterion::Sig32ParametersDiffer);
    case Width1Signature::Sig21:
      break;
  }
  if (a.s == b.s && a.t == b.t) return verdict(Status::Equivalent, Criterion::IdenticalParameters);
  if (a.s == b.s) {
    const bool same = std::gcd(static_cast<long long>(a.t), q - 1) == std::gcd(static_cast<long long>(b.t), q - 1);
    return same ? verdict(Status::Equivalent, Criterion::Sig21SameSEqualGcd)
                : verdict(Status::Inequivalent, Criterion::Sig21SameSDifferentGcd);
  }
  if (a.t == b.t) {
    const long long g = std::gcd(static_cast<long long>(a.t), q - 1);
    return mod_floor(a.s - b.s, g) == 0 ? verdict(Status::Equivalent, Criterion::Sig21SameTResidue)
                                        : verdict(Status::Inequivalent, Criterion::Sig21SameTResidueDiffers);
  }
  return verdict(Status::Inconclusive, Criterion::NoCriterion);
}

std::optional<EquivalenceVerdict> theorem_verdict(long long q, const LatticePolytope& a, const LatticePolytope& b) {
  if (a.family == Family::EmptyTetra && b.family == Family::EmptyTetra)
    return dim4_theorem_verdict(q, *a.s, *a.t, *b.s, *b.t);
  auto sa = width1_signature_of(a.family);
  auto sb = width1_signature_of(b.family);
  if (sa && sb)
    return dim5_theorem_verdict(q, {*sa, a.s.value_or(0), a.t.value_or(0)}, {*sb, b.s.value_or(0), b.t.value_or(0)});
  return std::nullopt;
}

std::vector<LatticePolytope> census_polytopes(long long q, CensusKind kind) {
  if (!prime_power(q)) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  const int tmax = static_cast<int>(q - 2);
  std::vector<LatticePolytope> out;
  if (kind == CensusKind::Dim4) {
    for (int t = 1; t <= tmax; ++t) {
      for (int s = 0; s < t; ++s)
        if (std::gcd(s, t) == 1) out.push_back(empty_tetrahedron(s, t));
      if (t == 1) out.push_back(empty_tetrahedron(1, 1));
    }
    return out;
  }
  for (int t = 1; t <= tmax; ++t)
    for (int s = 0; 2 * s <= t; ++s)
      if (std::gcd(s, t) == 1) out.push_back(width1_representative(Width1Signature::Sig21, s, t));
  out.push_back(width1_representative(Width1Signature::Sig22));
  out.push_back(width1_representative(Width1Signature::Sig31));
  for (int t = 1; t <= tmax; ++t)
    for (int s = 1; s <= t; ++s)
      if (std::gcd(s, t) == 1) out.push_back(width1_representative(Width1Signature::Sig32, s, t));
  return out;
}

CensusResult census_report(long long q, CensusKind kind, const CensusOptions& opts) {
  const FieldSpec field = make_field(static_cast<int>(q));
  if (kind == CensusKind::Dim5Width1 && q < 5)
    throw Error(ErrorCode::InvalidField, "width-1 five-point census needs q >= 5");
  const auto polytopes = census_polytopes(q, kind);

  CensusResult result;
  result.q = q;
  result.kind = kind;
  std::vector<ProfiledCode> codes;
  codes.reserve(polytopes.size());
  for (const auto& P : polytopes) codes.emplace_back(build_code(field, P));

  for (std::size_t i = 0; i < codes.size(); ++i) {
    CensusRow row;
    row.polytope = polytopes[i];
    row.n = codes[i].code().length();
    row.k = codes[i].code().dimension();
    row.formula = formula_distance(polytopes[i], q);
    row.d_brute = codes[i].distance(opts.threads).lower;
    result.rows.push_back(std::move(row));
  }

  std::vector<std::size_t> parent(codes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (std::size_t a = 0; a < codes.size(); ++a) {
    for (std::size_t b = a + 1; b < codes.size(); ++b) {
      CensusPair pair;
      pair.a = a;
      pair.b = b;
      // warm the caches with the requested thread count before the witness
      // test asks for invariants
      pair.witness = witness_equivalence(codes[a], codes[b], {true, false});
      if (pair.witness.status != Status::Equivalent) {
        codes[a].enumerator(opts.threads);
        codes[b].enumerator(opts.threads);
        pair.witness = witness_equivalence(codes[a], codes[b]);
      }
      pair.theorem = theorem_verdict(q, polytopes[a], polytopes[b]);
      pair.agrees = !pair.theorem || pair.theorem->status == Status::Inconclusive ||
                    pair.theorem->status == pair.witness.status;

      if (pair.witness.status == Status::Equivalent) {
        parent[find(b)] = find(a);
        if (codes[a].distance().lower != codes[b].distance().lower ||
            codes[a].enumerator(opts.threads) != codes[b].enumerator(opts.threads))
          throw std::logic_error("witnessed equivalence with differing invariants: " + to_spec_string(polytopes[a]) +
                                 " vs " + to_spec_string(polytopes[b]));
      }
      if (!pair.agrees) {
        result.rows[a].theorem_agrees = false;
        result.rows[b].theorem_agrees = false;
        std::ostringstream os;
        os << "GF(" << q << ") " << to_spec_string(polytopes[a]) << " vs " << to_spec_string(polytopes[b])
           << ": theorem " << pair.theorem->describe() << ", witness " << pair.witness.describe();
        result.mismatches.push_back(os.str());
      }
      result.pairs.push_back(std::move(pair));
    }
  }

  std::map<std::size_t, int> ids;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    auto [it, inserted] = ids.emplace(find(i), static_cast<int>(ids.size()));
    result.rows[i].class_id = it->second;
  }
  return result;
}

CensusResult census(long long q, CensusKind kind, const CensusOptions& opts) {
  auto result = census_report(q, kind, opts);
  if (!result.mismatches.empty()) {
    std::ostringstream os;
    os << result.mismatches.size() << " theorem/witness disagreement(s):";
    for (const auto& m : result.mismatches) os << "\n  " << m;
    throw Error(ErrorCode::TheoremWitnessMismatch, os.str());
  }
  return result;
}

}  // namespace toric3
