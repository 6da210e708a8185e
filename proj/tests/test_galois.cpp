#include <doctest.h>

#include <numeric>
#include <set>

#include "oracle.hpp"
#include "toric3/error.hpp"
#include "toric3/galois.hpp"

using namespace toric3;

namespace {

const int kOrders[] = {3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected toric3::Error");
  return ErrorCode::IOError;
}

}  // namespace

TEST_CASE("make_field rejects non prime powers and out-of-range orders") {
  CHECK(code_of([] { make_field(6); }) == ErrorCode::NotPrimePower);
  CHECK(code_of([] { make_field(12); }) == ErrorCode::NotPrimePower);
  CHECK(code_of([] { make_field(2); }) == ErrorCode::UnsupportedOrder);
  CHECK(code_of([] { make_field(67); }) == ErrorCode::UnsupportedOrder);
  CHECK(code_of([] { make_field(81); }) == ErrorCode::UnsupportedOrder);
}

TEST_CASE("GF(5) uses 2 as primitive root") {
  const auto f = make_field(5);
  std::vector<int> powers;
  for (int i = 0; i < 4; ++i) powers.push_back(f.to_int(f.exp(i)));
  CHECK(powers == std::vector<int>{1, 2, 4, 3});
  CHECK(f.to_int(f.pow(f.from_int(2), -1)) == 3);
}

TEST_CASE("GF(8) modulus x^3 + x + 1") {
  const auto f = make_field(8);
  CHECK(f.modulus() == std::vector<int>{1, 1, 0, 1});
  std::set<int> units;
  for (int i = 0; i < 7; ++i) units.insert(f.to_int(f.exp(i)));
  CHECK(units.size() == 7);
  CHECK(f.unit_order() == 7);
}

TEST_CASE("log tables agree with schoolbook polynomial arithmetic") {
  for (int q : kOrders) {
    CAPTURE(q);
    const auto f = make_field(q);
    const oracle::Field o(q);
    REQUIRE(f.p() == o.p);
    REQUIRE(f.degree() == o.m);
    for (int i = 0; i < q - 1; ++i) REQUIRE(f.to_int(f.exp(i)) == o.pow(o.alpha, i));
    for (int a = 0; a < q; ++a) {
      const auto A = f.from_int(a);
      REQUIRE(f.to_int(f.neg(A)) == o.neg(a));
      for (int b = 0; b < q; ++b) {
        const auto B = f.from_int(b);
        REQUIRE(f.to_int(f.add(A, B)) == o.add(a, b));
        REQUIRE(f.to_int(f.mul(A, B)) == o.mul(a, b));
        REQUIRE(f.add_int(a, b) == o.add(a, b));
      }
    }
  }
}

TEST_CASE("field axioms, exhaustive for q <= 9") {
  for (int q : {3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const auto f = make_field(q);
    for (int a = 0; a < q; ++a) {
      const auto A = f.from_int(a);
      CHECK(f.add(A, f.neg(A)).is_zero());
      if (!A.is_zero()) {
        CHECK(f.mul(A, f.inv(A)) == f.one());
        CHECK(f.pow(A, 0) == f.one());
        CHECK(f.pow(A, q - 1) == f.one());
        CHECK(f.exp(A.log()) == A);
      }
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) {
          const auto B = f.from_int(b), C = f.from_int(c);
          REQUIRE(f.mul(A, f.add(B, C)) == f.add(f.mul(A, B), f.mul(A, C)));
        }
    }
  }
}

TEST_CASE("pow accepts any exponent") {
  const auto f = make_field(7);
  CHECK(f.to_int(f.pow(f.from_int(3), 6)) == 1);
  CHECK(f.to_int(f.pow(f.from_int(3), -7)) == f.to_int(f.inv(f.from_int(3))));
  CHECK(f.pow(f.zero(), 0) == f.one());
  CHECK(f.pow(f.zero(), 3).is_zero());
  CHECK(code_of([&] { f.pow(f.zero(), -1); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([&] { f.inv(f.zero()); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([&] { f.from_int(7); }) == ErrorCode::OutOfRange);
}

TEST_CASE("solve_power examples") {
  const auto f7 = make_field(7);
  auto ints = [&](const std::vector<FieldElement>& v) {
    std::set<int> s;
    for (auto e : v) s.insert(f7.to_int(e));
    return s;
  };
  CHECK(ints(solve_power(f7, 2, f7.from_int(2))) == std::set<int>{3, 4});
  CHECK(solve_power(f7, 2, f7.from_int(3)).empty());
  const auto f5 = make_field(5);
  auto one = solve_power(f5, 1, f5.from_int(4));
  REQUIRE(one.size() == 1);
  CHECK(f5.to_int(one[0]) == 4);
  CHECK(code_of([&] { solve_power(f5, 2, f5.zero()); }) == ErrorCode::ZeroArgument);
}

TEST_CASE("power_image examples") {
  const auto f7 = make_field(7);
  std::set<int> cubes;
  for (auto e : power_image(f7, 3)) cubes.insert(f7.to_int(e));
  CHECK(cubes == std::set<int>{1, 6});
  CHECK(power_image(make_field(5), 3).size() == 4);
  CHECK(power_image(make_field(9), 2).size() == 4);
}

TEST_CASE("solve_power and power_image laws") {
  for (int q : {4, 5, 7, 8, 9, 13, 16}) {
    const auto f = make_field(q);
    for (long long t = 1; t <= 2 * q; ++t) {
      CAPTURE(q);
      CAPTURE(t);
      const long long g = std::gcd(t, static_cast<long long>(q - 1));
      std::size_t total = 0;
      for (int i = 0; i < q - 1; ++i) {
        const auto sols = solve_power(f, t, f.exp(i));
        CHECK((sols.empty() || sols.size() == static_cast<std::size_t>(g)));
        for (auto y : sols) CHECK(f.pow(y, t) == f.exp(i));
        total += sols.size();
      }
      CHECK(total == static_cast<std::size_t>(q - 1));
      CHECK(power_image(f, t) == power_image(f, g));
      CHECK(power_image(f, t).size() == static_cast<std::size_t>((q - 1) / g));
    }
  }
}

TEST_CASE("prime_power") {
  CHECK(prime_power(49) == std::pair{7, 2});
  CHECK(prime_power(64) == std::pair{2, 6});
  CHECK_FALSE(prime_power(1).has_value());
  CHECK_FALSE(prime_power(100).has_value());
  CHECK(is_prime(61));
  CHECK_FALSE(is_prime(91));
}
