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

#include "cubesum/representation.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubesum/mersenne.hpp"

namespace cubesum {

std::string_view to_string(SignClass s) { return s == SignClass::AllNonneg ? "all-nonneg" : "mixed"; }

SignClass parse_sign_class(std::string_view s) {
  if (s == "all-nonneg") return SignClass::AllNonneg;
  if (s == "mixed") return SignClass::Mixed;
  throw std::invalid_argument("unknown sign class: " + std::string(s));
}

BigInt sum_of_cubes(const std::vector<BigInt>& terms) {
  BigInt s = 0;
  for (const auto& t : terms) s += cube(t);
  return s;
}

Natural gcd_of(const std::vector<BigInt>& terms) {
  Natural g = 0;
  for (const auto& t : terms) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
  if (g == 0) throw std::domain_error("undefined gcd");
  return g;
}

std::string format_terms(const std::vector<BigInt>& terms) {
  std::string s = "(";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += ", ";
    s += to_decimal(terms[i]);
  }
  return s + ")";
}

Representation Representation::make(unsigned n, std::vector<BigInt> terms, std::string provenance) {
  require_index(n);
  if (terms.size() < 2 || terms.size() > 4)
    throw std::invalid_argument("a representation has 2, 3 or 4 terms");
  if (sum_of_cubes(terms) != p_value(n))
    throw std::logic_error("cube sum of " + format_terms(terms) + " is not P_" + std::to_string(n));
  Representation r;
  r.n_ = n;
  r.g_ = terms.size() == 3 ? gcd3(terms[0], terms[1], terms[2]) : gcd_of(terms);
  r.sign_ = std::all_of(terms.begin(), terms.end(), [](const BigInt& t) { return sgn(t) >= 0; })
                ? SignClass::AllNonneg
                : SignClass::Mixed;
  r.terms_ = std::move(terms);
  r.provenance_ = std::move(provenance);
  return r;
}

Representation Representation::canonical() const {
  Representation r = *this;
  std::sort(r.terms_.begin(), r.terms_.end());
  return r;
}

bool Representation::is_canonical() const { return std::is_sorted(terms_.begin(), terms_.end()); }

bool Representation::same_solution(const Representation& other) const {
  return n_ == other.n_ && canonical().terms_ == other.canonical().terms_;
}

Representation canonicalize(const Representation& rep) {
  // make() re-verifies the substitution on the sorted terms.
  auto terms = rep.terms();
  std::sort(terms.begin(), terms.end());
  return Representation::make(rep.n(), std::move(terms), rep.provenance());
}

std::vector<Representation> canonical_set(std::vector<Representation> reps) {
  for (auto& r : reps) r = r.canonical();
  std::stable_sort(reps.begin(), reps.end(), [](const Representation& a, const Representation& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    return a.terms() < b.terms();
  });
  reps.erase(std::unique(reps.begin(), reps.end(),
                         [](const Representation& a, const Representation& b) {
                           return a.n() == b.n() && a.terms() == b.terms();
                         }),
             reps.end());
  return reps;
}

}  // namespace cubesum
