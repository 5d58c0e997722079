// Copyright 2026 The cubesum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cubesum/bigmath.hpp"

using namespace cubesum;

namespace {

// Reference roots come straight from GMP rather than our Newton code.
Natural gmp_cbrt(const Natural& n) {
  Natural r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
  return r;
}

Natural gmp_sqrt(const Natural& n) {
  Natural r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Natural random_bits(gmp_randclass& rng, unsigned bits) { return rng.get_z_bits(bits); }

}  // namespace

TEST_SUITE("bigmath") {
  TEST_CASE("icbrt examples") {
    CHECK(icbrt(Natural(27)) == 3);
    CHECK(icbrt(Natural(0)) == 0);
    CHECK(icbrt(Natural(32640)) == 31);
    CHECK(icbrt(std::uint64_t{32640}) == 31);
    CHECK(icbrt(static_cast<u128>(32640)) == 31);
    CHECK_THROWS_AS(icbrt(Natural(-8)), std::domain_error);
  }

  TEST_CASE("icbrt exhaustive below 10^6") {
    std::uint64_t r = 0;
    for (std::uint64_t n = 0; n <= 1000000; ++n) {
      while ((r + 1) * (r + 1) * (r + 1) <= n) ++r;
      REQUIRE(icbrt(n) == r);
      if (n % 997 == 0) REQUIRE(icbrt(Natural(static_cast<unsigned long>(n))) == r);
    }
  }

  TEST_CASE("icbrt edges of the 64 and 128 bit ranges") {
    const std::uint64_t max64 = ~std::uint64_t{0};
    CHECK(icbrt(max64) == 2642245);
    for (std::uint64_t r : {std::uint64_t{2642245}, std::uint64_t{1} << 20, std::uint64_t{1000}}) {
      CHECK(icbrt(r * r * r) == r);
      CHECK(icbrt(r * r * r - 1) == r - 1);
    }
    const u128 max128 = ~u128{0};
    CHECK(from_u64(icbrt(max128)) == gmp_cbrt(from_u128(max128)));
  }

  TEST_CASE("roots agree with GMP on random inputs") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(12345);
    for (int i = 0; i < 2000; ++i) {
      const unsigned bits = 1 + static_cast<unsigned>(i % 400);
      const Natural n = random_bits(rng, bits);
      REQUIRE(icbrt(n) == gmp_cbrt(n));
      REQUIRE(isqrt(n) == gmp_sqrt(n));
      if (bits <= 128) {
        const Natural lo = n & ((Natural(1) << 64) - 1);
        const u128 v = (static_cast<u128>(to_u64(n >> 64)) << 64) | to_u64(lo);
        REQUIRE(from_u64(isqrt(v)) == gmp_sqrt(n));
        REQUIRE(from_u64(icbrt(v)) == gmp_cbrt(n));
      }
    }
  }

  TEST_CASE("isqrt_exact examples") {
    CHECK(isqrt_exact(Natural(36)) == Natural(6));
    CHECK_FALSE(isqrt_exact(Natural(35)).has_value());
    CHECK(isqrt_exact(Natural(0)) == Natural(0));
    CHECK(isqrt_exact(static_cast<u128>(36)) == std::uint64_t{6});
    CHECK_FALSE(isqrt_exact(static_cast<u128>(35)).has_value());
  }

  TEST_CASE("isqrt_exact on squares and neighbours up to 2^128") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20000; ++i) {
      const std::uint64_t s = rng() >> (rng() % 64);
      const u128 sq = static_cast<u128>(s) * s;
      REQUIRE(isqrt_exact(sq) == s);
      REQUIRE(isqrt_exact(from_u128(sq)) == from_u64(s));
      if (s > 0) {
        REQUIRE_FALSE(isqrt_exact(sq + 1).has_value());
        REQUIRE_FALSE(isqrt_exact(sq - 1 + (s == 1 ? 2 : 0)).has_value());
      }
    }
  }

  TEST_CASE("maybe_square never rejects a square") {
    for (std::uint64_t s = 0; s < 100000; ++s) {
      const std::uint64_t q = s * s;
      REQUIRE(maybe_square(q, q % 9, q % 5, q % 7));
    }
    CHECK_FALSE(maybe_square(2, 2, 2, 2));
  }

  TEST_CASE("gcd3 examples") {
    CHECK(gcd3(4, 6, 6) == 2);
    CHECK(gcd3(0, 1, 3) == 1);
    CHECK(gcd3(1024, 1014784, 1080320) == 1024);
    CHECK_THROWS_WITH_AS(gcd3(0, 0, 0), "undefined gcd", std::domain_error);
  }

  TEST_CASE("gcd3 ignores order and sign") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> dist(-5000, 5000);
    for (int i = 0; i < 5000; ++i) {
      const BigInt a = dist(rng), b = dist(rng), c = dist(rng);
      if (a == 0 && b == 0 && c == 0) continue;
      const Natural g = gcd3(a, b, c);
      REQUIRE(g > 0);
      REQUIRE(gcd3(c, a, b) == g);
      REQUIRE(gcd3(-b, a, -c) == g);
      REQUIRE(a % g == 0);
      REQUIRE(b % g == 0);
      REQUIRE(c % g == 0);
    }
  }

  TEST_CASE("decimal round trip") {
    for (const char* s : {"0", "-1", "12345678901234567890123456789", "-98765432109876543210"})
      CHECK(to_decimal(parse_decimal(s)) == s);
    CHECK(parse_decimal("+7") == 7);
    CHECK_THROWS_AS(parse_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal("12a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal("-"), std::invalid_argument);
  }

  TEST_CASE("conversion helpers") {
    CHECK(pow2(100) == Natural(1) << 100);
    CHECK(cube(-3) == -27);
    CHECK(fits_u64(from_u64(~std::uint64_t{0})));
    CHECK_FALSE(fits_u64(pow2(64)));
    CHECK_FALSE(fits_u64(-1));
    CHECK(from_i64(-5) == -5);
    CHECK(from_u128(static_cast<u128>(1) << 100) == pow2(100));
  }
}
