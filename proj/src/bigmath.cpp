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

#include "cubesum/bigmath.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace cubesum {

namespace {

void require_nonnegative(const Natural& n, const char* what) {
  if (sgn(n) < 0) throw std::domain_error(std::string(what) + ": negative argument");
}

constexpr std::array<bool, 64> kSquareMod64 = [] {
  std::array<bool, 64> t{};
  for (unsigned i = 0; i < 64; ++i) t[(i * i) % 64] = true;
  return t;
}();

}  // namespace

bool maybe_square(std::uint64_t low_word, unsigned mod9, unsigned mod5, unsigned mod7) {
  if (!kSquareMod64[low_word & 63]) return false;
  // squares mod 9: 0 1 4 7; mod 5: 0 1 4; mod 7: 0 1 2 4
  constexpr unsigned kSq9 = (1u << 0) | (1u << 1) | (1u << 4) | (1u << 7);
  constexpr unsigned kSq5 = (1u << 0) | (1u << 1) | (1u << 4);
  constexpr unsigned kSq7 = (1u << 0) | (1u << 1) | (1u << 2) | (1u << 4);
  return ((kSq9 >> mod9) & 1) && ((kSq5 >> mod5) & 1) && ((kSq7 >> mod7) & 1);
}

Natural icbrt(const Natural& n) {
  require_nonnegative(n, "icbrt");
  if (n < 2) return n;
  // Seed above the root: 2^ceil(bits/3) >= cbrt(n).
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Natural r = pow2((bits + 2) / 3);
  // Newton from above decreases monotonically until it undershoots the floor.
  for (;;) {
    Natural next = (2 * r + n / (r * r)) / 3;
    if (next >= r) break;
    r = std::move(next);
  }
  while (r * r * r > n) --r;
  while ((r + 1) * (r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t icbrt(u128 n) {
  if (n < 2) return static_cast<std::uint64_t>(n);
  // Floor cube root of 2^128 - 1; one more would overflow the cube.
  constexpr std::uint64_t kMaxRoot = 6981463658331;
  auto r = std::min(kMaxRoot, static_cast<std::uint64_t>(std::cbrt(static_cast<long double>(n))));
  auto cubed = [](std::uint64_t v) { return static_cast<u128>(v) * v * v; };
  while (r > 0 && cubed(r) > n) --r;
  while (r < kMaxRoot && cubed(r + 1) <= n) ++r;
  return r;
}

std::uint64_t icbrt(std::uint64_t n) { return icbrt(static_cast<u128>(n)); }

Natural isqrt(const Natural& n) {
  require_nonnegative(n, "isqrt");
  if (n < 2) return n;
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Natural r = pow2((bits + 1) / 2);
  for (;;) {
    Natural next = (r + n / r) / 2;
    if (next >= r) break;
    r = std::move(next);
  }
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t isqrt(u128 n) {
  if (n < 2) return static_cast<std::uint64_t>(n);
  // Floor root of a 128-bit value is below 2^64, but the rounded estimate
  // can land on 2^64 itself.
  const long double est = std::sqrt(static_cast<long double>(n));
  auto r = est >= 0x1p64L ? UINT64_MAX : static_cast<std::uint64_t>(est);
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (r != UINT64_MAX && static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<Natural> isqrt_exact(const Natural& n) {
  require_nonnegative(n, "isqrt_exact");
  const auto low = mpz_getlimbn(n.get_mpz_t(), 0);
  if (!maybe_square(static_cast<std::uint64_t>(low), mpz_fdiv_ui(n.get_mpz_t(), 9),
                    mpz_fdiv_ui(n.get_mpz_t(), 5), mpz_fdiv_ui(n.get_mpz_t(), 7)))
    return std::nullopt;
  Natural r = isqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

std::optional<std::uint64_t> isqrt_exact(u128 n) {
  if (!maybe_square(static_cast<std::uint64_t>(n), static_cast<unsigned>(n % 9),
                    static_cast<unsigned>(n % 5), static_cast<unsigned>(n % 7)))
    return std::nullopt;
  const auto r = isqrt(n);
  if (static_cast<u128>(r) * r != n) return std::nullopt;
  return r;
}

Natural gcd3(const BigInt& x, const BigInt& y, const BigInt& z) {
  if (sgn(x) == 0 && sgn(y) == 0 && sgn(z) == 0) throw std::domain_error("undefined gcd");
  Natural g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  return g;
}

BigInt cube(const BigInt& v) { return v * v * v; }

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_setbit(r.get_mpz_t(), e);
  return r;
}

bool fits_u64(const BigInt& v) {
  static_assert(sizeof(unsigned long) == 8);
  return mpz_fits_ulong_p(v.get_mpz_t()) != 0;
}

std::uint64_t to_u64(const BigInt& v) {
  if (!fits_u64(v)) throw std::out_of_range("value does not fit in 64 bits");
  return mpz_get_ui(v.get_mpz_t());
}

BigInt from_u64(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

BigInt from_i64(std::int64_t v) { return BigInt(static_cast<long>(v)); }

BigInt from_u128(u128 v) {
  BigInt hi = from_u64(static_cast<std::uint64_t>(v >> 64));
  BigInt r = hi << 64;
  return r + from_u64(static_cast<std::uint64_t>(v));
}

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

BigInt parse_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("not a decimal integer: '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("not a decimal integer: '" + s + "'");
  BigInt r(s[0] == '+' ? s.substr(1) : s, 10);
  return r;
}

}  // namespace cubesum
