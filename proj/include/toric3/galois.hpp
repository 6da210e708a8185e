#pragma once

// Exact arithmetic in GF(q), 3 <= q <= 64, in primitive-element (discrete
// logarithm) representation. Addition of units goes through a Zech
// logarithm table; a second "integer representation" (base-p digit vector
// of the polynomial basis) is kept for conversions and for the independent
// codeword-weight route in toric_code.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace toric3 {

/// An element of GF(q): either zero or alpha^log with log in [0, q-2].
class FieldElement {
 public:
  constexpr FieldElement() = default;

  static constexpr FieldElement zero() { return FieldElement{}; }
  /// `log` must already be reduced into [0, q-2]; see FieldSpec::exp.
  static constexpr FieldElement from_log(int log) { return FieldElement{log}; }

  constexpr bool is_zero() const { return log_ < 0; }
  constexpr int log() const { return log_; }

  friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;

 private:
  constexpr explicit FieldElement(int log) : log_(log) {}
  int log_ = -1;
};

/// GF(p^m) together with its log/antilog/Zech tables. Immutable once built.
class FieldSpec {
 public:
  int p() const { return p_; }
  int degree() const { return m_; }
  int q() const { return q_; }
  /// Order of the unit group, q - 1.
  int unit_order() const { return q_ - 1; }
  /// Monic modulus, coefficients low to high (length m + 1). For prime
  /// fields this is the linear polynomial x - alpha.
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement::zero(); }
  FieldElement one() const { return FieldElement::from_log(0); }
  FieldElement alpha() const { return exp(1); }
  /// alpha^i for any integer i.
  FieldElement exp(long long i) const;

  /// Integer representation: the base-p digits of v are the polynomial-basis
  /// coordinates (for prime q this is just the residue).
  FieldElement from_int(int v) const;
  int to_int(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  /// Any integer exponent; negative exponents need a unit. pow(0, 0) = 1.
  FieldElement pow(FieldElement a, long long e) const;

  /// log(1 + alpha^i), or -1 when 1 + alpha^i = 0.
  int zech(int i) const { return zech_[static_cast<std::size_t>(i)]; }
  /// Log of -1 (0 in characteristic 2).
  int log_minus_one() const { return log_minus_one_; }
  /// Addition in the integer representation.
  int add_int(int a, int b) const { return add_int_[static_cast<std::size_t>(a * q_ + b)]; }
  int antilog_int(int i) const { return exp_int_[static_cast<std::size_t>(i)]; }

  std::string describe() const;

  friend FieldSpec make_field(int q);

 private:
  FieldSpec(int p, int m, std::vector<int> modulus, int primitive_root);

  int reduce(long long i) const;

  int p_;
  int m_;
  int q_;
  std::vector<int> modulus_;
  std::vector<int> exp_int_;  // log -> integer rep
  std::vector<int> log_;      // integer rep -> log (-1 for 0)
  std::vector<int> zech_;
  std::vector<int> add_int_;
  int log_minus_one_ = 0;
};

/// Builds GF(q) for prime powers 3 <= q <= 64.
/// Throws Error{NotPrimePower} or Error{UnsupportedOrder}.
FieldSpec make_field(int q);

bool is_prime(long long n);
/// (p, m) with q = p^m, or nullopt.
std::optional<std::pair<int, int>> prime_power(long long q);

/// All units y with y^t = A, ordered by discrete log.
/// Size is gcd(t, q-1) when A is a t-th power, 0 otherwise.
std::vector<FieldElement> solve_power(const FieldSpec& field, long long t, FieldElement A);

/// The subgroup {y^t : y a unit}, ordered by discrete log. This is the image
/// of the power map y -> y^t; it is a field automorphism only when t is a
/// power of p, so "Frobenius" is the wrong name for it in general.
std::vector<FieldElement> power_image(const FieldSpec& field, long long t);

}  // namespace toric3
