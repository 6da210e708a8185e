#pragma once

// Toric codes C_P over GF(q): the generator matrix evaluates the monomial
// of each lattice point of P at every point of the torus (F_q^*)^m, and the
// minimum distance is found by exhaustive search over polynomials.
//
// Columns are the torus points (alpha^i, alpha^j, alpha^l) in lexicographic
// order of (i, j, l); rows follow the polytope's point order. Because every
// entry is a unit, G is stored as discrete logarithms.

#include <cstdint>
#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toric3/galois.hpp"
#include "toric3/polytope.hpp"

namespace toric3 {

struct DistanceResult {
  enum class Method { Brute, Formula, Bound };

  long long lower = 0;
  long long upper = 0;
  bool exact = false;
  Method method = Method::Brute;
  /// The raw lower bound was <= 0 and has been clamped to 1.
  bool vacuous = false;

  static DistanceResult exact_value(long long d, Method m) { return {d, d, true, m, false}; }
  bool contains(long long d) const { return lower <= d && d <= upper; }
};

std::string_view to_string(DistanceResult::Method m);

class ToricCode {
 public:
  const FieldSpec& field() const { return field_; }
  const LatticePolytope& polytope() const { return polytope_; }
  /// m in (F_q^*)^m; 3 for the 3-fold codes, smaller for planar checks.
  int torus_dim() const { return torus_dim_; }
  std::size_t length() const { return n_; }
  std::size_t dimension() const { return polytope_.size(); }

  /// Discrete log of G[row][col].
  int entry_log(std::size_t row, std::size_t col) const { return logs_[row * n_ + col]; }
  FieldElement entry(std::size_t row, std::size_t col) const { return FieldElement::from_log(entry_log(row, col)); }
  std::span<const std::uint8_t> row_logs(std::size_t row) const { return {logs_.data() + row * n_, n_}; }
  /// Discrete logs (i, j, l) of the torus point of a column; unused trailing
  /// coordinates are 0 when torus_dim < 3.
  std::array<int, 3> column_point(std::size_t col) const;

  friend ToricCode build_code(const FieldSpec& field, const LatticePolytope& P, int torus_dim);

 private:
  ToricCode(FieldSpec field, LatticePolytope P, int torus_dim);

  FieldSpec field_;
  LatticePolytope polytope_;
  int torus_dim_;
  std::size_t n_;
  std::vector<std::uint8_t> logs_;
};

/// Throws ExponentCollision when two points agree componentwise mod q-1
/// (the rows would coincide), InvalidParams when a point uses a coordinate
/// beyond torus_dim.
ToricCode build_code(const FieldSpec& field, const LatticePolytope& P, int torus_dim = 3);

/// The codeword uG.
std::vector<FieldElement> encode(const ToricCode& code, std::span<const FieldElement> u);

/// Torus zeros of the polynomial with coefficient vector u (row order).
std::size_t count_zeros(const ToricCode& code, std::span<const FieldElement> u);

/// One polynomial per scaling class: first nonzero coefficient equal to 1.
std::size_t projective_count(int q, std::size_t k);
std::vector<FieldElement> projective_representative(const FieldSpec& field, std::size_t k, std::size_t index);

struct ZeroSearch {
  std::size_t max_zeros = 0;
  std::vector<FieldElement> maximizer;  // first representative attaining it
};

ZeroSearch search_max_zeros(const ToricCode& code, unsigned threads = 0);
std::size_t max_zeros(const ToricCode& code, unsigned threads = 0);

/// Minimum nonzero codeword weight, evaluated through the integer
/// representation (digit-table addition) rather than Zech logarithms.
std::size_t min_codeword_weight(const ToricCode& code, unsigned threads = 0);

/// n - max_zeros, cross-checked against min_codeword_weight. A disagreement
/// is an internal bug and raises std::logic_error.
DistanceResult min_distance_brute(const ToricCode& code, unsigned threads = 0);

using WeightEnumerator = std::map<std::size_t, std::uint64_t>;

/// Weight distribution over all q^k codewords.
WeightEnumerator weight_enumerator(const ToricCode& code, unsigned threads = 0);

/// Rows of discrete logs separated by spaces, "-inf" for zero entries.
std::string dump_matrix(const ToricCode& code);

}  // namespace toric3
