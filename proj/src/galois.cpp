#include "toric3/galois.hpp"

#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "toric3/error.hpp"

namespace toric3 {
namespace {

struct PinnedModulus {
  int q;
  std::array<int, 7> coeffs;  // low to high, monic, unused tail is zero
};

// Primitive polynomials, verified at field construction.
constexpr std::array<PinnedModulus, 9> kPinned{{
    {4, {1, 1, 1}},
    {8, {1, 1, 0, 1}},
    {9, {2, 2, 1}},
    {16, {1, 1, 0, 0, 1}},
    {25, {2, 1, 1}},
    {27, {1, 2, 0, 1}},
    {32, {1, 0, 1, 0, 0, 1}},
    {49, {3, 1, 1}},
    {64, {1, 1, 0, 0, 0, 0, 1}},
}};

long long mod_floor(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

int smallest_primitive_root(int p) {
  for (int g = 2; g < p; ++g) {
    int x = 1;
    int period = 0;
    do {
      x = x * g % p;
      ++period;
    } while (x != 1);
    if (period == p - 1) return g;
  }
  return 1;  // p = 2
}

long long inverse_mod(long long a, long long n) {
  long long r0 = n, r1 = mod_floor(a, n), s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long k = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - k * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - k * s1};
  }
  return mod_floor(s0, n);
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power(long long q) {
  if (q < 2) return std::nullopt;
  long long p = 2;
  while (q % p != 0) ++p;
  int m = 0;
  long long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return std::nullopt;
  return std::pair{static_cast<int>(p), m};
}

FieldSpec::FieldSpec(int p, int m, std::vector<int> modulus, int primitive_root)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < m; ++i) q_ *= p;
  const int n = q_ - 1;

  auto digits = [&](int v) {
    std::vector<int> d(static_cast<std::size_t>(m));
    for (auto& x : d) {
      x = v % p;
      v /= p;
    }
    return d;
  };
  auto pack = [&](const std::vector<int>& d) {
    int v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
    return v;
  };

  add_int_.resize(static_cast<std::size_t>(q_ * q_));
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a);
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b);
      std::vector<int> s(static_cast<std::size_t>(m));
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = (da[i] + db[i]) % p;
      add_int_[static_cast<std::size_t>(a * q_ + b)] = pack(s);
    }
  }

  exp_int_.assign(static_cast<std::size_t>(n), 0);
  log_.assign(static_cast<std::size_t>(q_), -1);
  int x = 1;
  for (int i = 0; i < n; ++i) {
    if (log_[static_cast<std::size_t>(x)] != -1)
      throw std::logic_error("modulus for GF(" + std::to_string(q_) + ") is not primitive");
    exp_int_[static_cast<std::size_t>(i)] = x;
    log_[static_cast<std::size_t>(x)] = i;
    if (m == 1) {
      x = x * primitive_root % p;
    } else {
      // multiply by the class of X modulo the monic modulus
      auto d = digits(x);
      int top = d.back();
      for (int k = m - 1; k > 0; --k) d[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(k - 1)];
      d[0] = 0;
      for (int k = 0; k < m; ++k) {
        auto& c = d[static_cast<std::size_t>(k)];
        c = static_cast<int>(mod_floor(c - top * modulus_[static_cast<std::size_t>(k)], p));
      }
      x = pack(d);
    }
  }
  if (x != 1)
    throw std::logic_error("modulus for GF(" + std::to_string(q_) + ") is not primitive");

  zech_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) zech_[static_cast<std::size_t>(i)] = log_[static_cast<std::size_t>(add_int(1, exp_int_[static_cast<std::size_t>(i)]))];
  log_minus_one_ = (p == 2) ? 0 : n / 2;
}

int FieldSpec::reduce(long long i) const { return static_cast<int>(mod_floor(i, q_ - 1)); }

FieldElement FieldSpec::exp(long long i) const { return FieldElement::from_log(reduce(i)); }

FieldElement FieldSpec::from_int(int v) const {
  if (v < 0 || v >= q_)
    throw Error(ErrorCode::OutOfRange, "integer representation " + std::to_string(v) + " outside GF(" +
                                           std::to_string(q_) + ")");
  int l = log_[static_cast<std::size_t>(v)];
  return l < 0 ? FieldElement::zero() : FieldElement::from_log(l);
}

int FieldSpec::to_int(FieldElement a) const {
  return a.is_zero() ? 0 : exp_int_[static_cast<std::size_t>(a.log())];
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // a + b = a (1 + b/a)
  int z = zech(reduce(static_cast<long long>(b.log()) - a.log()));
  if (z < 0) return FieldElement::zero();
  return FieldElement::from_log(reduce(static_cast<long long>(a.log()) + z));
}

FieldElement FieldSpec::neg(FieldElement a) const {
  if (a.is_zero()) return a;
  return FieldElement::from_log(reduce(static_cast<long long>(a.log()) + log_minus_one_));
}

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
  if (a.is_zero() || b.is_zero()) return FieldElement::zero();
  return FieldElement::from_log(reduce(static_cast<long long>(a.log()) + b.log()));
}

FieldElement FieldSpec::inv(FieldElement a) const {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return FieldElement::from_log(reduce(-static_cast<long long>(a.log())));
}

FieldElement FieldSpec::pow(FieldElement a, long long e) const {
  if (a.is_zero()) {
    if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return e == 0 ? one() : zero();
  }
  long long r = mod_floor(e, q_ - 1);
  return FieldElement::from_log(reduce(static_cast<long long>(a.log()) * r));
}

std::string FieldSpec::describe() const {
  std::ostringstream os;
  os << "GF(" << q_ << ") = GF(" << p_ << "^" << m_ << ")";
  if (m_ > 1) {
    os << ", modulus";
    bool first = true;
    for (int i = m_; i >= 0; --i) {
      int c = modulus_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      os << (first ? " " : " + ");
      first = false;
      if (i == 0 || c != 1) os << c;
      if (i >= 1) os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  os << ", alpha = " << to_int(alpha()) << " (integer rep)";
  return os.str();
}

FieldSpec make_field(int q) {
  auto pm = prime_power(q);
  if (!pm) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (q < 3 || q > 64) throw Error(ErrorCode::UnsupportedOrder, "q = " + std::to_string(q) + " outside [3, 64]");
  auto [p, m] = *pm;
  if (m == 1) {
    int g = smallest_primitive_root(p);
    return FieldSpec(p, 1, {static_cast<int>(mod_floor(-g, p)), 1}, g);
  }
  for (const auto& pin : kPinned) {
    if (pin.q != q) continue;
    std::vector<int> mod(pin.coeffs.begin(), pin.coeffs.begin() + m + 1);
    return FieldSpec(p, m, std::move(mod), 0);
  }
  throw Error(ErrorCode::UnsupportedOrder, "no pinned modulus for q = " + std::to_string(q));
}

std::vector<FieldElement> solve_power(const FieldSpec& field, long long t, FieldElement A) {
  if (A.is_zero()) throw Error(ErrorCode::ZeroArgument, "solve_power with A = 0");
  if (t < 1) throw Error(ErrorCode::InvalidParams, "solve_power needs t >= 1");
  // y = alpha^i solves t*i = log(A) (mod n)
  const long long n = field.unit_order();
  const long long g = std::gcd(t, n);
  std::vector<FieldElement> out;
  if (A.log() % g != 0) return out;
  const long long step = n / g;
  const long long i0 = mod_floor((A.log() / g) * inverse_mod(t / g, step), step);
  for (long long j = 0; j < g; ++j) out.push_back(field.exp(i0 + j * step));
  return out;
}

std::vector<FieldElement> power_image(const FieldSpec& field, long long t) {
  if (t < 1) throw Error(ErrorCode::InvalidParams, "power_image needs t >= 1");
  const long long n = field.unit_order();
  const long long g = std::gcd(t, n);
  std::vector<FieldElement> out;
  for (long long i = 0; i < n; i += g) out.push_back(field.exp(i));
  return out;
}

}  // namespace toric3
