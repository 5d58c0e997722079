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

#include "cubesum/twocubes.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubesum/mersenne.hpp"
#include "cubesum/search.hpp"

namespace cubesum {

std::vector<std::pair<BigInt, BigInt>> two_cube_solutions(const Natural& target, const FactorMap& factors,
                                                          std::size_t divisor_cap) {
  if (target < 1) throw std::invalid_argument("two-cube target must be >= 1");
  std::vector<std::pair<BigInt, BigInt>> out;
  for (const auto& d : divisors_up_to(factors, icbrt(Natural(4 * target)), divisor_cap)) {
    if (auto yz = solve_divisor(target, d)) out.emplace_back(yz->second, yz->first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<BigInt, BigInt>> two_cube_solutions(const Natural& target, const FactorOptions& opts) {
  return two_cube_solutions(target, factorize(target, opts));
}

TwoCubeResult search_two_cubes(unsigned n, const TwoCubeOptions& opts) {
  require_index(n);
  TwoCubeResult res;
  res.n = n;
  if (n > opts.max_certified_n) {
    res.note = "n beyond the certified range (max " + std::to_string(opts.max_certified_n) + ")";
    return res;
  }
  FactorMap factors;
  try {
    // P_n = 2^{n-1} (2^n - 1) with the second factor odd.
    factors = factorize(Natural(pow2(n) - 1), opts.factor);
  } catch (const FactorizationTimeout& e) {
    res.note = std::string("range not certified: ") + e.what();
    return res;
  }
  if (n > 1) factors.insert(factors.begin(), {Natural(2), n - 1});
  const Natural target = p_value(n);
  if (product(factors) != target) throw std::logic_error("factorization of P_n does not multiply back");
  std::vector<Representation> reps;
  for (auto& [x, y] : two_cube_solutions(target, factors))
    reps.push_back(Representation::make(n, {x, y}, "search:two-cubes"));
  res.reps = canonical_set(std::move(reps));
  res.certified = true;
  return res;
}

}  // namespace cubesum
