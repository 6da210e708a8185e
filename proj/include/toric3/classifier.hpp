#pragma once

// Monomial equivalence of toric codes: the classification criteria for the
// 4-point and width-1 five-point families, and a constructive witness test
// that exhibits G2 = P G1 D Pi (P a row relabeling, D diagonal, Pi a column
// permutation) or separates the codes by an invariant.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toric3/toric_code.hpp"

namespace toric3 {

enum class Status { Equivalent, Inequivalent, Inconclusive };
std::string_view to_string(Status s);

enum class Criterion {
  IdenticalParameters,
  SameSEqualGcd,         // T(s,t1) vs T(s,t2): gcd(t1,q-1) = gcd(t2,q-1)
  SameSDifferentGcd,
  SameTResidue,          // s1 = s2 mod gcd(t, q-1)
  SameTWhiteOrbit,       // s1 = +-s2^{+-1} mod t
  SameTNeither,
  SignaturesDiffer,
  SingleClassSignature,  // (2,2) and (3,1)
  Sig32ParametersDiffer,
  Sig21SameSEqualGcd,
  Sig21SameSDifferentGcd,
  Sig21SameTResidue,
  Sig21SameTResidueDiffers,
  NoCriterion,           // both parameters differ, or families not covered
};
std::string_view to_string(Criterion c);

/// G2[r][j] = G1[row_order[r]][column_map[j]] * alpha^scale_log[j].
struct Witness {
  std::vector<std::size_t> row_order;
  std::vector<std::size_t> column_map;
  std::vector<int> scale_log;

  bool trivial_rows() const;
  bool trivial_scaling() const;
};

struct InvariantEvidence {
  std::string name;
  std::string value_a;
  std::string value_b;
};

struct EquivalenceVerdict {
  Status status = Status::Inconclusive;
  std::variant<std::monostate, Criterion, Witness, InvariantEvidence> evidence;

  std::string describe() const;
};

/// True when the witness reproduces c2's matrix from c1's exactly.
bool verify_witness(const ToricCode& c1, const ToricCode& c2, const Witness& w);

/// A code with its distance and weight enumerator computed on first use.
/// Not safe for concurrent first use from several threads.
class ProfiledCode {
 public:
  explicit ProfiledCode(ToricCode code) : code_(std::move(code)) {}

  const ToricCode& code() const { return code_; }
  /// `threads` only matters for the call that does the computation.
  const DistanceResult& distance(unsigned threads = 0) const;
  const WeightEnumerator& enumerator(unsigned threads = 0) const;

 private:
  ToricCode code_;
  mutable std::optional<DistanceResult> distance_;
  mutable std::optional<WeightEnumerator> enumerator_;
};

struct WitnessOptions {
  /// Also try row relabelings with the column scaling they force. With
  /// this off only G2 = G1 Pi is searched.
  bool allow_relabeling = true;
  /// Compare distances and weight enumerators when no witness exists.
  bool check_invariants = true;
};

/// Witness search. Order: identity rows with D = I, then every row
/// relabeling (lexicographic) with D fixed by normalizing columns at the
/// first row. The column map is canonical: columns sorted by their
/// normalized vector, ties by index, matched in order. Without a witness
/// the verdict is Inequivalent only if an invariant separates the codes.
/// Throws ShapeMismatch for different q, n or k.
EquivalenceVerdict witness_equivalence(const ProfiledCode& c1, const ProfiledCode& c2,
                                       const WitnessOptions& opts = {});
EquivalenceVerdict witness_equivalence(const ToricCode& c1, const ToricCode& c2, const WitnessOptions& opts = {});

/// Cells P(x0, z0, A) = {(x,y,z) : (x,z) = (x0,z0), y^t = A}, keyed by the
/// discrete logs (log x0, log z0, log A).
struct ColumnPartition {
  long long t = 0;
  std::map<std::array<int, 3>, std::vector<std::size_t>> cells;
};

/// For codes on T(s,t) or P21(s,t); UnsupportedFamily otherwise.
ColumnPartition column_partition(const ToricCode& code);

/// Classification by the criteria for empty tetrahedra. Same t: equivalent
/// iff s1 = s2 mod gcd(t,q-1) or s1 = +-s2^{+-1} mod t. Same s: equivalent
/// iff the gcds with q-1 agree. Both different: Inconclusive.
EquivalenceVerdict dim4_theorem_verdict(long long q, int s1, int t1, int s2, int t2);

/// gcd(t, q-1) = 1, i.e. every T(s,t) gives the same code class.
bool dim4_gcd_corollary(long long q, long long t);

struct Width1Params {
  Width1Signature sig;
  int s = 0;
  int t = 0;
};

EquivalenceVerdict dim5_theorem_verdict(long long q, const Width1Params& a, const Width1Params& b);

/// Theorem verdict for any pair of polytopes the criteria cover (both T, or
/// both width-1 families); nullopt otherwise.
std::optional<EquivalenceVerdict> theorem_verdict(long long q, const LatticePolytope& a, const LatticePolytope& b);

enum class CensusKind { Dim4, Dim5Width1 };

/// The parameter sweep: every family member fitting [0, q-2]^3, in
/// (family, t, s) order. Dim4 adds T(1,1) beside T(0,1).
std::vector<LatticePolytope> census_polytopes(long long q, CensusKind kind);

struct CensusRow {
  LatticePolytope polytope;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<DistanceResult> formula;
  long long d_brute = 0;
  int class_id = 0;
  bool theorem_agrees = true;
};

struct CensusPair {
  std::size_t a = 0;
  std::size_t b = 0;
  EquivalenceVerdict witness;
  std::optional<EquivalenceVerdict> theorem;
  bool agrees = true;
};

struct CensusResult {
  long long q = 0;
  CensusKind kind = CensusKind::Dim4;
  std::vector<CensusRow> rows;
  std::vector<CensusPair> pairs;
  std::vector<std::string> mismatches;  // one reproduction line per disagreeing pair
};

struct CensusOptions {
  unsigned threads = 0;
};

/// Full census; returns mismatches instead of throwing.
CensusResult census_report(long long q, CensusKind kind, const CensusOptions& opts = {});

/// As census_report but raises TheoremWitnessMismatch on any disagreement.
CensusResult census(long long q, CensusKind kind, const CensusOptions& opts = {});

}  // namespace toric3
