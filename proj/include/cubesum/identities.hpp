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

// Closed-form representations of P_n as sums of three and four cubes.

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubesum/representation.hpp"

namespace cubesum {

/// Names of the three-cube families, as used in provenance tags
/// ("identity:<family>") and on the command line.
///   3m+1      P_{3m+1} = 2^{6m} + 2^{6m} - 2^{3m}                          (m >= 0)
///   6m+2      P_{6m+2} = (2^{4m+1})^3 - (2^{2m})^3 - (2^{2m})^3             (m >= 0)
///   6m+1-21   the 64t^3(2t^6-1) identity at t = 2^m, integral for m >= 2
///   6m+1-2t6  t^6(2t^6-1) = (t^2(t^2+t-1))^3 + (t^2(t^2-t-1))^3 + (t^2)^3 at t = 2^m
///   6m+5-a    the t^3(t^6-2) identity at t = 2^{m+1}
///   6m+5-b    the second P_{6m+5} form
const std::vector<std::string>& three_cube_families();

/// Every applicable family evaluated at n, verified, canonicalized and
/// deduplicated. Empty when n = 0 or 3 (mod 6).
std::vector<Representation> three_cube_identity(unsigned n);

/// A single family, canonicalized; empty when the family does not apply to n.
/// Throws std::invalid_argument for an unknown family name.
std::vector<Representation> three_cube_identity(unsigned n, std::string_view family);

/// Raised when a t-numerator is not divisible as the four-cube construction
/// requires. Never expected; it would contradict the congruences on P_n.
class DivisibilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Four-cube representation for n >= 2, terms in construction order:
///   even n = 2m:   (t, 1-t, 1-t, t-2)           t = (2^{4m-2} - 2^{2m-2} + 3) / 3
///   odd n = 2m+1:  (3t-12, 13-3t, -t, t-9)      t = (2^{4m} - 2^{2m-1} + 130) / 9
/// Throws std::domain_error for n < 2.
Representation four_cube_rep(unsigned n);

/// The numerator and divisor of the four-cube parameter t.
struct FourCubeParameter {
  BigInt numerator;
  unsigned divisor;
};
FourCubeParameter four_cube_parameter(unsigned n);

/// Known representations from the reference data (n = 2, 3, 8, 20 and the
/// scaled-search list for n = 41..51), loaded from the embedded CSV and
/// verified on first use.
const std::vector<Representation>& special_reps();

struct PolynomialIdentity {
  std::string id;
  std::string text;
  unsigned degree;
  std::function<BigInt(const BigInt&)> lhs;
  std::function<BigInt(const BigInt&)> rhs;
};

/// The catalogued identities: "2t6", "64t3", "t3t6", "6t-1", "9t-130".
const std::vector<PolynomialIdentity>& polynomial_identities();

/// Evaluates both sides exactly at each sample. Agreement at more than
/// `degree` distinct points certifies the identity.
/// Throws std::invalid_argument for an unknown id.
bool verify_polynomial_identity(std::string_view id, std::span<const BigInt> samples);

}  // namespace cubesum
