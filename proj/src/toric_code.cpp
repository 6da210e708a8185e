#include "toric3/toric_code.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"
#include "toric3/error.hpp"

namespace toric3 {
namespace {

long long mod_floor(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Zeros of sum_r alpha^(ulog[r] + G[r][c]) over the columns, with the Zech
// table doing the additions. ulog[r] < 0 marks a zero coefficient.
std::size_t zeros_zech(const ToricCode& code, const std::vector<int>& ulog) {
  const FieldSpec& F = code.field();
  const int N = F.unit_order();
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  std::size_t zeros = 0;
  for (std::size_t c = 0; c < n; ++c) {
    int acc = -1;
    for (std::size_t r = 0; r < k; ++r) {
      if (ulog[r] < 0) continue;
      int term = ulog[r] + code.entry_log(r, c);
      if (term >= N) term -= N;
      if (acc < 0) {
        acc = term;
        continue;
      }
      int diff = term - acc;
      if (diff < 0) diff += N;
      int z = F.zech(diff);
      if (z < 0) {
        acc = -1;
      } else {
        acc += z;
        if (acc >= N) acc -= N;
      }
    }
    if (acc < 0) ++zeros;
  }
  return zeros;
}

std::vector<int> to_logs(std::span<const FieldElement> u) {
  std::vector<int> out(u.size());
  std::transform(u.begin(), u.end(), out.begin(), [](FieldElement a) { return a.is_zero() ? -1 : a.log(); });
  return out;
}

// G with entries in the integer representation, rows concatenated.
std::vector<int> int_matrix(const ToricCode& code) {
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  std::vector<int> g(n * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c) g[r * n + c] = code.field().antilog_int(code.entry_log(r, c));
  return g;
}

// mul_table[a][b] over integer representations.
std::vector<int> int_mul_table(const FieldSpec& F) {
  const int q = F.q();
  std::vector<int> t(static_cast<std::size_t>(q * q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      t[static_cast<std::size_t>(a * q + b)] = F.to_int(F.mul(F.from_int(a), F.from_int(b)));
  return t;
}

}  // namespace

std::string_view to_string(DistanceResult::Method m) {
  switch (m) {
    case DistanceResult::Method::Brute: return "BRUTE";
    case DistanceResult::Method::Formula: return "FORMULA";
    case DistanceResult::Method::Bound: return "BOUND";
  }
  return "?";
}

ToricCode::ToricCode(FieldSpec field, LatticePolytope P, int torus_dim)
    : field_(std::move(field)), polytope_(std::move(P)), torus_dim_(torus_dim), n_(0) {
  const long long N = field_.unit_order();
  n_ = ipow(static_cast<std::size_t>(N), static_cast<std::size_t>(torus_dim_));
  const std::size_t k = polytope_.size();
  logs_.resize(n_ * k);
  for (std::size_t r = 0; r < k; ++r) {
    const Point3 p = polytope_.points[r];
    for (std::size_t c = 0; c < n_; ++c) {
      auto [i, j, l] = column_point(c);
      logs_[r * n_ + c] = static_cast<std::uint8_t>(mod_floor(p.x * i + p.y * j + p.z * l, N));
    }
  }
}

std::array<int, 3> ToricCode::column_point(std::size_t col) const {
  const std::size_t N = static_cast<std::size_t>(field_.unit_order());
  std::array<int, 3> out{0, 0, 0};
  for (int d = torus_dim_ - 1; d >= 0; --d) {
    out[static_cast<std::size_t>(d)] = static_cast<int>(col % N);
    col /= N;
  }
  return out;
}

ToricCode build_code(const FieldSpec& field, const LatticePolytope& P, int torus_dim) {
  if (torus_dim < 1 || torus_dim > 3) throw Error(ErrorCode::InvalidParams, "torus dimension must be 1, 2 or 3");
  if (P.points.empty()) throw Error(ErrorCode::InvalidParams, "empty polytope");
  const long long N = field.unit_order();
  std::set<Point3> reduced;
  for (const auto& p : P.points) {
    if ((torus_dim < 3 && p.z != 0) || (torus_dim < 2 && p.y != 0))
      throw Error(ErrorCode::InvalidParams, "point uses a coordinate beyond the torus dimension");
    Point3 red{mod_floor(p.x, N), mod_floor(p.y, N), mod_floor(p.z, N)};
    if (!reduced.insert(red).second)
      throw Error(ErrorCode::ExponentCollision, to_spec_string(P) + " has two points congruent mod q-1 = " +
                                                   std::to_string(N) + "; it does not fit GF(" +
                                                   std::to_string(field.q()) + ")");
  }
  return ToricCode(field, P, torus_dim);
}

std::vector<FieldElement> encode(const ToricCode& code, std::span<const FieldElement> u) {
  if (u.size() != code.dimension()) throw Error(ErrorCode::ShapeMismatch, "coefficient vector has wrong length");
  const FieldSpec& F = code.field();
  std::vector<FieldElement> word(code.length());
  for (std::size_t c = 0; c < word.size(); ++c) {
    FieldElement acc = F.zero();
    for (std::size_t r = 0; r < u.size(); ++r) acc = F.add(acc, F.mul(u[r], code.entry(r, c)));
    word[c] = acc;
  }
  return word;
}

std::size_t count_zeros(const ToricCode& code, std::span<const FieldElement> u) {
  if (u.size() != code.dimension()) throw Error(ErrorCode::ShapeMismatch, "coefficient vector has wrong length");
  if (std::all_of(u.begin(), u.end(), [](FieldElement a) { return a.is_zero(); }))
    throw Error(ErrorCode::ZeroPolynomial, "count_zeros of the zero polynomial");
  return zeros_zech(code, to_logs(u));
}

std::size_t projective_count(int q, std::size_t k) {
  std::size_t total = 0;
  for (std::size_t lead = 0; lead < k; ++lead) total += ipow(static_cast<std::size_t>(q), k - 1 - lead);
  return total;
}

std::vector<FieldElement> projective_representative(const FieldSpec& field, std::size_t k, std::size_t index) {
  const std::size_t q = static_cast<std::size_t>(field.q());
  std::vector<FieldElement> u(k, field.zero());
  for (std::size_t lead = 0; lead < k; ++lead) {
    const std::size_t block = ipow(q, k - 1 - lead);
    if (index >= block) {
      index -= block;
      continue;
    }
    u[lead] = field.one();
    for (std::size_t r = k; r-- > lead + 1;) {
      u[r] = field.from_int(static_cast<int>(index % q));
      index /= q;
    }
    return u;
  }
  throw Error(ErrorCode::OutOfRange, "projective index out of range");
}

ZeroSearch search_max_zeros(const ToricCode& code, unsigned threads) {
  const std::size_t k = code.dimension();
  const std::size_t total = projective_count(code.field().q(), k);
  struct Best {
    std::size_t zeros = 0;
    std::size_t index = std::numeric_limits<std::size_t>::max();
  };
  auto best = detail::parallel_reduce(
      total, threads, Best{},
      [&](std::size_t begin, std::size_t end) {
        Best b;
        for (std::size_t i = begin; i < end; ++i) {
          auto u = projective_representative(code.field(), k, i);
          std::size_t z = zeros_zech(code, to_logs(u));
          if (b.index == std::numeric_limits<std::size_t>::max() || z > b.zeros) b = {z, i};
        }
        return b;
      },
      [](Best acc, Best part) {
        if (part.index == std::numeric_limits<std::size_t>::max()) return acc;
        if (acc.index == std::numeric_limits<std::size_t>::max() || part.zeros > acc.zeros ||
            (part.zeros == acc.zeros && part.index < acc.index))
          return part;
        return acc;
      });
  return {best.zeros, projective_representative(code.field(), k, best.index)};
}

std::size_t max_zeros(const ToricCode& code, unsigned threads) { return search_max_zeros(code, threads).max_zeros; }

std::size_t min_codeword_weight(const ToricCode& code, unsigned threads) {
  const FieldSpec& F = code.field();
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  const auto g = int_matrix(code);
  const auto mul = int_mul_table(F);
  const int q = F.q();
  return detail::parallel_reduce(
      projective_count(q, k), threads, n,
      [&](std::size_t begin, std::size_t end) {
        std::size_t best = n;
        std::vector<int> word(n);
        for (std::size_t i = begin; i < end; ++i) {
          auto u = projective_representative(F, k, i);
          std::fill(word.begin(), word.end(), 0);
          for (std::size_t r = 0; r < k; ++r) {
            const int ur = F.to_int(u[r]);
            if (ur == 0) continue;
            const int* row = g.data() + r * n;
            for (std::size_t c = 0; c < n; ++c)
              word[c] = F.add_int(word[c], mul[static_cast<std::size_t>(ur * q + row[c])]);
          }
          std::size_t w = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](int v) { return v != 0; }));
          best = std::min(best, w);
        }
        return best;
      },
      [](std::size_t a, std::size_t b) { return std::min(a, b); });
}

DistanceResult min_distance_brute(const ToricCode& code, unsigned threads) {
  const std::size_t n = code.length();
  const std::size_t by_zeros = n - max_zeros(code, threads);
  const std::size_t by_weight = min_codeword_weight(code, threads);
  if (by_zeros != by_weight) {
    std::ostringstream os;
    os << "distance routes disagree on " << to_spec_string(code.polytope()) << " over GF(" << code.field().q()
       << "): n - max_zeros = " << by_zeros << ", min weight = " << by_weight;
    throw std::logic_error(os.str());
  }
  return DistanceResult::exact_value(static_cast<long long>(by_zeros), DistanceResult::Method::Brute);
}

WeightEnumerator weight_enumerator(const ToricCode& code, unsigned threads) {
  const FieldSpec& F = code.field();
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  const std::size_t q = static_cast<std::size_t>(F.q());
  const auto g = int_matrix(code);
  const auto mul = int_mul_table(F);

  // The last coefficient varies innermost: precompute v * row_{k-1} for
  // every v, and build the prefix combination once per outer index.
  std::vector<int> last_scaled(q * n);
  for (std::size_t v = 0; v < q; ++v)
    for (std::size_t c = 0; c < n; ++c)
      last_scaled[v * n + c] = mul[v * q + static_cast<std::size_t>(g[(k - 1) * n + c])];

  using Counts = std::vector<std::uint64_t>;
  auto counts = detail::parallel_reduce(
      ipow(q, k - 1), threads, Counts(n + 1, 0),
      [&](std::size_t begin, std::size_t end) {
        Counts local(n + 1, 0);
        std::vector<int> prefix(n);
        for (std::size_t outer = begin; outer < end; ++outer) {
          std::fill(prefix.begin(), prefix.end(), 0);
          std::size_t digits = outer;
          for (std::size_t r = k - 1; r-- > 0;) {
            const std::size_t ur = digits % q;
            digits /= q;
            if (ur == 0) continue;
            const int* row = g.data() + r * n;
            for (std::size_t c = 0; c < n; ++c)
              prefix[c] = F.add_int(prefix[c], mul[ur * q + static_cast<std::size_t>(row[c])]);
          }
          for (std::size_t v = 0; v < q; ++v) {
            const int* scaled = last_scaled.data() + v * n;
            std::size_t w = 0;
            for (std::size_t c = 0; c < n; ++c) w += F.add_int(prefix[c], scaled[c]) != 0;
            ++local[w];
          }
        }
        return local;
      },
      [](Counts acc, Counts part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
        return acc;
      });

  WeightEnumerator out;
  for (std::size_t w = 0; w <= n; ++w)
    if (counts[w] != 0) out[w] = counts[w];
  return out;
}

std::string dump_matrix(const ToricCode& code) {
  std::ostringstream os;
  for (std::size_t r = 0; r < code.dimension(); ++r) {
    for (std::size_t c = 0; c < code.length(); ++c) {
      if (c) os << ' ';
      FieldElement e = code.entry(r, c);
      if (e.is_zero())
        os << "-inf";
      else
        os << e.log();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace toric3
