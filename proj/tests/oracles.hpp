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

// Brute-force reference computations. Deliberately independent of the
// library's search path: no factoring, no divisor method, plain enumeration.

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace cubesum::oracle {

using Triple64 = std::array<std::int64_t, 3>;
using Pair64 = std::pair<std::int64_t, std::int64_t>;

/// Every 0 <= x <= y <= z with x^3 + y^3 + z^3 = N <= limit, bucketed by N.
std::map<std::int64_t, std::vector<Triple64>> nonneg_three_cubes_up_to(std::int64_t limit);

/// Every x <= y with x + y >= 1 and x^3 + y^3 = N <= limit, bucketed by N.
std::map<std::int64_t, std::vector<Pair64>> two_cubes_up_to(std::int64_t limit);

/// Trial-division primality and factorization for small values.
bool is_prime_trial(std::uint64_t n);
std::vector<std::pair<std::uint64_t, unsigned>> factor_trial(std::uint64_t n);
std::vector<std::uint64_t> divisors_brute(std::uint64_t n);

}  // namespace cubesum::oracle
