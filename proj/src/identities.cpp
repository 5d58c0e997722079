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

#include "cubesum/identities.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "cubesum/mersenne.hpp"
#include "cubesum/reference_data.hpp"

namespace cubesum {

namespace {

Representation family_rep(unsigned n, std::string_view family, std::vector<BigInt> terms) {
  return Representation::make(n, std::move(terms), "identity:" + std::string(family));
}

std::vector<Representation> evaluate_family(unsigned n, std::string_view family) {
  std::vector<Representation> out;
  if (family == "3m+1") {
    if (n % 3 != 1) return out;
    const unsigned m = (n - 1) / 3;
    out.push_back(family_rep(n, family, {pow2(2 * m), pow2(2 * m), -pow2(m)}));
  } else if (family == "6m+2") {
    if (n % 6 != 2) return out;
    const unsigned m = (n - 2) / 6;
    out.push_back(family_rep(n, family, {pow2(4 * m + 1), -pow2(2 * m), -pow2(2 * m)}));
  } else if (family == "6m+1-21") {
    if (n % 6 != 1) return out;
    const unsigned m = (n - 1) / 6;
    if (m < 2) return out;  // 2^{m-2} is not an integer
    const BigInt scale = pow2(m - 2);
    const BigInt core = pow2(3 * m + 2);
    out.push_back(family_rep(n, family, {scale * (core - 21), scale * (core + 21), -11 * pow2(2 * m - 1)}));
  } else if (family == "6m+1-2t6") {
    if (n % 6 != 1) return out;
    const BigInt t = pow2((n - 1) / 6);
    const BigInt t2 = t * t;
    out.push_back(family_rep(n, family, {t2 * (t2 + t - 1), t2 * (t2 - t - 1), t2}));
  } else if (family == "6m+5-a") {
    if (n % 6 != 5) return out;
    const unsigned m = (n - 5) / 6;
    const BigInt a = pow2(3 * (m + 1));
    const BigInt b = pow2(2 * (m + 1));
    out.push_back(family_rep(n, family, {pow2(m) * (a + b + 1), pow2(m) * (a - b - 1), -b * (pow2(2 * m + 1) + 1)}));
  } else if (family == "6m+5-b") {
    if (n % 6 != 5) return out;
    const unsigned m = (n - 5) / 6;
    const BigInt s = pow2(2 * m + 1);
    const BigInt b = pow2(2 * (m + 1));
    const BigInt c = pow2(m + 1);
    out.push_back(family_rep(n, family, {s * (b - c - 1), s * (b + c - 1), -pow2(4 * m + 3)}));
  } else {
    throw std::invalid_argument("unknown identity family: " + std::string(family));
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

const std::vector<std::string>& three_cube_families() {
  static const std::vector<std::string> kFamilies = {"3m+1", "6m+2", "6m+1-21", "6m+1-2t6", "6m+5-a", "6m+5-b"};
  return kFamilies;
}

std::vector<Representation> three_cube_identity(unsigned n, std::string_view family) {
  require_index(n);
  return canonical_set(evaluate_family(n, family));
}

std::vector<Representation> three_cube_identity(unsigned n) {
  require_index(n);
  std::vector<Representation> all;
  for (const auto& f : three_cube_families()) {
    auto reps = evaluate_family(n, f);
    all.insert(all.end(), std::make_move_iterator(reps.begin()), std::make_move_iterator(reps.end()));
  }
  return canonical_set(std::move(all));
}

FourCubeParameter four_cube_parameter(unsigned n) {
  if (n < 2) throw std::domain_error("four-cube construction needs n >= 2 (t is not integral for P_1)");
  if (n % 2 == 0) {
    const unsigned m = n / 2;
    return {pow2(4 * m - 2) - pow2(2 * m - 2) + 3, 3};
  }
  const unsigned m = (n - 1) / 2;
  return {pow2(4 * m) - pow2(2 * m - 1) + 130, 9};
}

Representation four_cube_rep(unsigned n) {
  const auto [numerator, divisor] = four_cube_parameter(n);
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), divisor))
    throw DivisibilityError("four-cube parameter numerator for n = " + std::to_string(n) +
                            " is not divisible by " + std::to_string(divisor));
  const BigInt t = numerator / divisor;
  if (n % 2 == 0) return Representation::make(n, {t, 1 - t, 1 - t, t - 2}, "identity:four-even");
  return Representation::make(n, {3 * t - 12, 13 - 3 * t, -t, t - 9}, "identity:four-odd");
}

const std::vector<Representation>& special_reps() {
  static const std::vector<Representation> reps = [] {
    std::vector<Representation> out;
    for (const auto& row : parse_csv(reference_csv(ReferenceTable::SpecialReps))) {
      const unsigned n = static_cast<unsigned>(std::stoul(row.at("n")));
      std::vector<BigInt> terms;
      for (const auto& t : split(row.at("terms"), ';')) terms.push_back(parse_decimal(t));
      try {
        out.push_back(Representation::make(n, std::move(terms), "table:" + row.at("source")));
      } catch (const std::logic_error& e) {
        throw std::runtime_error(std::string("embedded reference data corrupted: ") + e.what());
      }
    }
    return out;
  }();
  return reps;
}

const std::vector<PolynomialIdentity>& polynomial_identities() {
  static const std::vector<PolynomialIdentity> kIds = {
      {"2t6", "2t^6-1 = (t^2+t-1)^3 + (t^2-t-1)^3 + 1", 6,
       [](const BigInt& t) -> BigInt { return 2 * t * t * t * t * t * t - 1; },
       [](const BigInt& t) -> BigInt { return cube(t * t + t - 1) + cube(t * t - t - 1) + 1; }},
      {"64t3", "64t^3(2t^6-1) = (4t^3-21)^3 + (4t^3+21)^3 - (22t)^3", 9,
       [](const BigInt& t) -> BigInt { return 64 * cube(t) * (2 * cube(t) * cube(t) - 1); },
       [](const BigInt& t) -> BigInt { return cube(4 * cube(t) - 21) + cube(4 * cube(t) + 21) - cube(22 * t); }},
      {"t3t6", "t^3(t^6-2) = (t^3+t^2+1)^3 + (t^3-t^2-1)^3 - (t(t^2+2))^3", 9,
       [](const BigInt& t) -> BigInt { return cube(t) * (cube(t) * cube(t) - 2); },
       [](const BigInt& t) -> BigInt {
         return cube(cube(t) + t * t + 1) + cube(cube(t) - t * t - 1) - cube(t * (t * t + 2));
       }},
      {"6t-1", "t^3 - 2(t-1)^3 + (t-2)^3 = 6(t-1)", 3,
       [](const BigInt& t) -> BigInt { return cube(t) - 2 * cube(t - 1) + cube(t - 2); },
       [](const BigInt& t) -> BigInt { return 6 * (t - 1); }},
      {"9t-130", "(3t-12)^3 - (3t-13)^3 - t^3 + (t-9)^3 = 2(9t-130)", 3,
       [](const BigInt& t) -> BigInt { return cube(3 * t - 12) - cube(3 * t - 13) - cube(t) + cube(t - 9); },
       [](const BigInt& t) -> BigInt { return 2 * (9 * t - 130); }},
  };
  return kIds;
}

bool verify_polynomial_identity(std::string_view id, std::span<const BigInt> samples) {
  const auto& ids = polynomial_identities();
  const auto it = std::find_if(ids.begin(), ids.end(), [&](const PolynomialIdentity& p) { return p.id == id; });
  if (it == ids.end()) throw std::invalid_argument("unknown polynomial identity: " + std::string(id));
  return std::all_of(samples.begin(), samples.end(),
                     [&](const BigInt& t) { return it->lhs(t) == it->rhs(t); });
}

}  // namespace cubesum
