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

#include "cubesum/mersenne.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cubesum {

bool ResidueClass::contains(unsigned r) const {
  return std::binary_search(allowed.begin(), allowed.end(), r % modulus);
}

void require_index(unsigned n) {
  if (n == 0) throw std::invalid_argument("index n must be >= 1");
}

Natural p_value(unsigned n) {
  require_index(n);
  return pow2(n - 1) * (pow2(n) - 1);
}

unsigned p_mod9(unsigned n) {
  require_index(n);
  static constexpr std::array<unsigned, 6> kPeriod = {1, 6, 1, 3, 1, 0};
  return kPeriod[(n - 1) % 6];
}

const ResidueClass& two_cube_residues_mod9() {
  static const ResidueClass kClass{9, {0, 1, 2, 7, 8}};
  return kClass;
}

ResidueClass x_residue_filter_for(unsigned target_mod9) {
  ResidueClass out{3, {}};
  for (unsigned x = 0; x < 3; ++x) {
    const unsigned x3 = (x * x * x) % 9;
    if (two_cube_residues_mod9().contains((target_mod9 % 9 + 9 - x3) % 9)) out.allowed.push_back(x);
  }
  return out;
}

ResidueClass x_residue_filter(unsigned n) {
  switch (n % 6) {
    case 2: return {3, {2}};
    case 4: return {3, {1}};
    default: require_index(n); return {3, {0, 1, 2}};
  }
}

bool is_perfect_cube(const Natural& v) {
  if (sgn(v) < 0) return is_perfect_cube(-v);
  const Natural r = icbrt(v);
  return r * r * r == v;
}

SanityReport sanity_checks(unsigned n_max) {
  require_index(n_max);
  SanityReport rep;
  rep.n_max = n_max;
  for (unsigned n = 1; n <= n_max; ++n) {
    const Natural p = p_value(n);
    auto fail = [&](std::string fact) { rep.failures.push_back({n, std::move(fact)}); };
    // P_1 = 1 = 1^3; the cube facts start at n = 2.
    if (n >= 2 && is_perfect_cube(p)) fail("P_n is a perfect cube");
    if (n >= 2 && is_perfect_cube(p / 2)) fail("P_n is twice a cube");
    const unsigned r9 = mpz_fdiv_ui(p.get_mpz_t(), 9);
    if (r9 == 4 || r9 == 5) fail("P_n = +-4 (mod 9)");
    if (r9 != p_mod9(n)) fail("P_n mod 9 disagrees with the period-6 table");
    if (n % 2 == 0 && mpz_fdiv_ui(p.get_mpz_t(), 6) != 0) fail("P_2m != 0 (mod 6)");
    if (n % 2 == 1 && n >= 3 && mpz_fdiv_ui(p.get_mpz_t(), 18) != 10) fail("P_2m+1 != 10 (mod 18)");
    ++rep.checked;
  }
  return rep;
}

}  // namespace cubesum
