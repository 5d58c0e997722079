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

#include <string>
#include <string_view>
#include <vector>

#include "cubesum/bigmath.hpp"

namespace cubesum {

enum class SignClass { AllNonneg, Mixed };

std::string_view to_string(SignClass s);
SignClass parse_sign_class(std::string_view s);

/// Cube bases whose cubes sum to P_n. Constructed only through make(), which
/// checks the sum exactly, so every live object satisfies its equation.
class Representation {
 public:
  /// Throws std::logic_error when the cubes do not sum to P_n.
  static Representation make(unsigned n, std::vector<BigInt> terms, std::string provenance);

  unsigned n() const { return n_; }
  const std::vector<BigInt>& terms() const { return terms_; }
  const Natural& g() const { return g_; }
  SignClass sign_class() const { return sign_; }
  const std::string& provenance() const { return provenance_; }

  /// Terms sorted ascending; idempotent.
  Representation canonical() const;
  bool is_canonical() const;

  /// Equality of n and the canonical term multiset.
  bool same_solution(const Representation& other) const;

  bool operator==(const Representation&) const = default;

 private:
  Representation() = default;

  unsigned n_ = 0;
  std::vector<BigInt> terms_;
  Natural g_;
  SignClass sign_ = SignClass::AllNonneg;
  std::string provenance_;
};

Representation canonicalize(const Representation& rep);

/// Canonicalizes, sorts by (n, terms) and drops duplicate solutions
/// (keeping the first provenance seen).
std::vector<Representation> canonical_set(std::vector<Representation> reps);

BigInt sum_of_cubes(const std::vector<BigInt>& terms);
Natural gcd_of(const std::vector<BigInt>& terms);
std::string format_terms(const std::vector<BigInt>& terms);

}  // namespace cubesum
