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

// P_n = 2^(n-1) * (2^n - 1) and the congruence facts the search relies on.

#include <optional>
#include <string>
#include <vector>

#include "cubesum/bigmath.hpp"

namespace cubesum {

/// A set of admissible residues modulo `modulus`.
struct ResidueClass {
  unsigned modulus = 1;
  std::vector<unsigned> allowed;  // ascending, each < modulus

  bool contains(unsigned r) const;
  bool operator==(const ResidueClass&) const = default;
};

/// Throws std::invalid_argument when n == 0.
void require_index(unsigned n);

Natural p_value(unsigned n);

/// P_n mod 9 from the period-6 table (1, 6, 1, 3, 1, 0).
unsigned p_mod9(unsigned n);

/// Residues of a^3 + b^3 mod 9 for integers a, b: {0, 1, 2, 7, 8}.
const ResidueClass& two_cube_residues_mod9();

/// Allowed residues of x mod 3 for which (target - x^3) mod 9 can be a sum
/// of two cubes. Works for any target; see x_residue_filter for P_n.
ResidueClass x_residue_filter_for(unsigned target_mod9);

/// x mod 3 filter for P_n: {2} for n = 2 (mod 6), {1} for n = 4 (mod 6),
/// otherwise {0, 1, 2}.
ResidueClass x_residue_filter(unsigned n);

struct SanityFailure {
  unsigned n;
  std::string fact;
};

struct SanityReport {
  unsigned n_max = 0;
  unsigned checked = 0;
  std::vector<SanityFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks, for every n <= n_max: P_n is not a cube and P_n / 2 is not a cube (n >= 2),
/// P_n mod 9 is neither 4 nor 5, P_n mod 9 agrees with the period table,
/// P_{2m} = 0 (mod 6) and P_{2m+1} = 10 (mod 18) for m >= 1.
SanityReport sanity_checks(unsigned n_max);

bool is_perfect_cube(const Natural& v);

}  // namespace cubesum
