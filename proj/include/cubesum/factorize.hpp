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

// Complete factorization of positive integers and divisor enumeration.
//
// Strategy: trial division by the primes below 10^5, then Miller-Rabin, then
// Brent's variant of Pollard rho with seeded restarts on composite
// cofactors. Values that fit in 64 bits run on a Montgomery-form fast path.
//
// Primality is deterministic below 3.3e24 (first 13 prime bases, which
// covers every 64-bit value and every residual the n <= 40 searches see).
// Above that bound 65 additional pseudo-random bases are used, giving an
// error probability below 2^-128.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cubesum/bigmath.hpp"

namespace cubesum {

inline constexpr std::size_t kDefaultDivisorCap = std::size_t{1} << 24;
inline constexpr std::uint32_t kTrialDivisionBound = 100000;

template <class T>
struct PrimePower {
  T prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

/// Primes strictly increasing; product of prime^exponent is the factored value.
template <class T>
using BasicFactorMap = std::vector<PrimePower<T>>;
using FactorMap = BasicFactorMap<Natural>;
using FactorMap64 = BasicFactorMap<std::uint64_t>;

struct FactorOptions {
  /// Number of rho restarts (fresh polynomial and start point) per cofactor.
  unsigned rho_retry_budget = 16;
  /// Mixed into the per-value seed; 0 keeps runs reproducible per value.
  std::uint64_t seed = 0;
  /// Draw restarts from std::random_device instead of the value-derived seed.
  bool fresh_randomness = false;
  /// Wall-clock limit for one factorize() call.
  std::optional<std::chrono::milliseconds> timeout;
};

class FactorizationTimeout : public std::runtime_error {
 public:
  explicit FactorizationTimeout(Natural value);
  const Natural& value() const { return value_; }

 private:
  Natural value_;
};

class DivisorExplosion : public std::runtime_error {
 public:
  DivisorExplosion(long double count, std::size_t cap);
  long double count() const { return count_; }

 private:
  long double count_;
};

bool is_prime(std::uint64_t n);
bool is_prime(const Natural& n);

/// Throws std::domain_error for n < 1, FactorizationTimeout when the rho
/// budget or the time limit runs out.
FactorMap64 factorize(std::uint64_t n, const FactorOptions& opts = {});
FactorMap factorize(const Natural& n, const FactorOptions& opts = {});

Natural product(const FactorMap& f);
std::uint64_t product(const FactorMap64& f);
FactorMap widen(const FactorMap64& f);

/// Number of divisors, prod(exponent + 1), as a long double to survive overflow.
template <class T>
long double divisor_count(const BasicFactorMap<T>& f) {
  long double c = 1;
  for (const auto& pp : f) c *= static_cast<long double>(pp.exponent) + 1;
  return c;
}

/// All positive divisors in ascending order. Throws DivisorExplosion when the
/// count exceeds `cap`.
std::vector<std::uint64_t> divisors(const FactorMap64& f, std::size_t cap = kDefaultDivisorCap);
std::vector<Natural> divisors(const FactorMap& f, std::size_t cap = kDefaultDivisorCap);

/// Divisors d <= limit in ascending order; the exponent odometer skips
/// branches that already exceed the limit. `cap` bounds the output size.
std::vector<std::uint64_t> divisors_up_to(const FactorMap64& f, std::uint64_t limit,
                                          std::size_t cap = kDefaultDivisorCap);
std::vector<Natural> divisors_up_to(const FactorMap& f, const Natural& limit,
                                    std::size_t cap = kDefaultDivisorCap);

/// Primes below kTrialDivisionBound.
const std::vector<std::uint32_t>& small_primes();

}  // namespace cubesum
