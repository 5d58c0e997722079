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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace cubesum::oracle {

std::map<std::int64_t, std::vector<Triple64>> nonneg_three_cubes_up_to(std::int64_t limit) {
  std::map<std::int64_t, std::vector<Triple64>> out;
  for (std::int64_t x = 0; x * x * x <= limit; ++x)
    for (std::int64_t y = x; x * x * x + y * y * y <= limit; ++y)
      for (std::int64_t z = y; x * x * x + y * y * y + z * z * z <= limit; ++z)
        out[x * x * x + y * y * y + z * z * z].push_back({x, y, z});
  return out;
}

std::map<std::int64_t, std::vector<Pair64>> two_cubes_up_to(std::int64_t limit) {
  // With d = x + y >= 1: (y - x)^2 = (4N/d - d^2)/3 <= 4N/3, so the larger
  // term is at most (1 + sqrt(4N/3)) / 2 <= sqrt(N/3) + 1.
  const auto bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(limit) / 3.0)) + 2;
  std::map<std::int64_t, std::vector<Pair64>> out;
  for (std::int64_t y = 1; y <= bound; ++y)
    for (std::int64_t x = 1 - y; x <= y; ++x) {
      const std::int64_t n = x * x * x + y * y * y;
      if (n >= 1 && n <= limit) out[n].push_back({x, y});
    }
  for (auto& [n, v] : out) std::sort(v.begin(), v.end());
  return out;
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_trial(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors_brute(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace cubesum::oracle
