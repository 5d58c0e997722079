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

// Integer solutions of N = x^3 + y^3. Since N > 0 forces d = x + y >= 1 and
// N = d (x^2 - xy + y^2), every solution (mixed signs included) comes from a
// divisor d of N with d^3 <= 4N.

#include <string>
#include <utility>
#include <vector>

#include "cubesum/factorize.hpp"
#include "cubesum/representation.hpp"

namespace cubesum {

/// Pairs (x, y) with x <= y, ascending, for a positive N with known factorization.
std::vector<std::pair<BigInt, BigInt>> two_cube_solutions(const Natural& target, const FactorMap& factors,
                                                          std::size_t divisor_cap = kDefaultDivisorCap);
/// Factors N first; may throw FactorizationTimeout.
std::vector<std::pair<BigInt, BigInt>> two_cube_solutions(const Natural& target, const FactorOptions& opts = {});

struct TwoCubeOptions {
  /// Largest n whose Mersenne cofactor is attempted.
  unsigned max_certified_n = 60;
  FactorOptions factor;
};

struct TwoCubeResult {
  unsigned n = 0;
  std::vector<Representation> reps;  // 2-term, canonical
  /// False when n is beyond max_certified_n or 2^n - 1 could not be factored;
  /// reps is then empty and says nothing.
  bool certified = false;
  std::string note;
};

TwoCubeResult search_two_cubes(unsigned n, const TwoCubeOptions& opts = {});

}  // namespace cubesum
