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

#pragma once

// Exact integer primitives shared by every module: floor roots, exact square
// roots, gcd. Nothing here ever rounds.

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace cubesum {

/// Signed arbitrary-precision integer.
using BigInt = mpz_class;

/// Non-negative arbitrary-precision integer. Same representation as BigInt;
/// functions taking a Natural throw std::domain_error on negative input.
using Natural = mpz_class;

using u128 = unsigned __int128;
using i128 = __int128;

/// Floor cube root: r with r^3 <= n < (r+1)^3.
Natural icbrt(const Natural& n);
std::uint64_t icbrt(std::uint64_t n);
std::uint64_t icbrt(u128 n);

/// Floor square root.
Natural isqrt(const Natural& n);
std::uint64_t isqrt(u128 n);

/// s with s^2 == n, or nullopt when n is not a perfect square.
/// Cheap residue rejections run before the root is taken.
std::optional<Natural> isqrt_exact(const Natural& n);
std::optional<std::uint64_t> isqrt_exact(u128 n);

/// Residue quick-reject used by isqrt_exact; true means "may be a square".
bool maybe_square(std::uint64_t low_word, unsigned mod9, unsigned mod5, unsigned mod7);

/// gcd(|x|, |y|, |z|). Throws std::domain_error("undefined gcd") if all are zero.
Natural gcd3(const BigInt& x, const BigInt& y, const BigInt& z);

BigInt cube(const BigInt& v);
BigInt pow2(unsigned long e);

bool fits_u64(const BigInt& v);
std::uint64_t to_u64(const BigInt& v);
BigInt from_u64(std::uint64_t v);
BigInt from_i64(std::int64_t v);
BigInt from_u128(u128 v);

std::string to_decimal(const BigInt& v);
/// Parses an optionally signed decimal string; throws std::invalid_argument.
BigInt parse_decimal(const std::string& s);

}  // namespace cubesum
