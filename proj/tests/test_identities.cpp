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

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "cubesum/identities.hpp"
#include "cubesum/mersenne.hpp"
#include "cubesum/reference_data.hpp"

using namespace cubesum;

namespace {

bool contains_terms(const std::vector<Representation>& reps, unsigned n, std::vector<BigInt> terms) {
  std::sort(terms.begin(), terms.end());
  return std::any_of(reps.begin(), reps.end(),
                     [&](const Representation& r) { return r.n() == n && r.canonical().terms() == terms; });
}

std::vector<BigInt> samples(long lo, long hi) {
  std::vector<BigInt> out;
  for (long t = lo; t <= hi; ++t) out.emplace_back(t);
  return out;
}

}  // namespace

TEST_SUITE("identities") {
  TEST_CASE("three-cube examples") {
    CHECK(contains_terms(three_cube_identity(4), 4, {4, 4, -2}));
    CHECK(contains_terms(three_cube_identity(8), 8, {32, -4, -4}));
    CHECK(contains_terms(three_cube_identity(5), 5, {13, 3, -12}));
    CHECK(contains_terms(three_cube_identity(5), 5, {2, 10, -8}));
    CHECK(contains_terms(three_cube_identity(13), 13, {235, 277, -88}));
    CHECK(three_cube_identity(3).empty());
    CHECK(three_cube_identity(6).empty());
  }

  TEST_CASE("single families") {
    CHECK(three_cube_identity(7, "6m+1-21").empty());  // needs m >= 2
    CHECK(three_cube_identity(13, "6m+1-21").size() == 1);
    CHECK(three_cube_identity(7, "6m+1-2t6").size() == 1);
    CHECK(three_cube_identity(8, "3m+1").empty());
    CHECK_THROWS_AS(three_cube_identity(7, "nope"), std::invalid_argument);
    for (const auto& fam : three_cube_families())
      for (const auto& r : three_cube_identity(25, fam)) CHECK(r.provenance() == "identity:" + fam);
  }

  TEST_CASE("three-cube outputs hold for n up to 1000") {
    for (unsigned n = 1; n <= 1000; ++n) {
      const auto reps = three_cube_identity(n);
      const Natural p = p_value(n);
      for (const auto& r : reps) {
        REQUIRE(r.n() == n);
        REQUIRE(r.terms().size() == 3);
        REQUIRE(sum_of_cubes(r.terms()) == p);
        REQUIRE(r.is_canonical());
      }
      if (n % 6 == 0 || n % 6 == 3) REQUIRE(reps.empty());
      else REQUIRE_FALSE(reps.empty());
      if (n >= 7 && (n % 6 == 1 || n % 6 == 5)) REQUIRE(reps.size() >= 2);
    }
  }

  TEST_CASE("four-cube examples") {
    const auto r2 = four_cube_rep(2);
    CHECK(r2.terms() == std::vector<BigInt>{2, -1, -1, 0});
    CHECK(four_cube_rep(3).terms() == std::vector<BigInt>{36, -35, -16, 7});
    CHECK(four_cube_rep(4).terms() == std::vector<BigInt>{21, -20, -20, 19});
    CHECK(four_cube_parameter(4).numerator == 63);
    CHECK(four_cube_parameter(4).divisor == 3);
    CHECK(four_cube_rep(3).provenance() == "identity:four-odd");
    CHECK(r2.provenance() == "identity:four-even");
    CHECK_THROWS_AS(four_cube_rep(1), std::domain_error);
  }

  TEST_CASE("four cubes for n up to 1000") {
    for (unsigned n = 2; n <= 1000; ++n) {
      const auto par = four_cube_parameter(n);
      REQUIRE(par.numerator % par.divisor == 0);
      const auto r = four_cube_rep(n);
      REQUIRE(r.terms().size() == 4);
      REQUIRE(sum_of_cubes(r.terms()) == p_value(n));
    }
  }

  TEST_CASE("special representations") {
    const auto& reps = special_reps();
    CHECK(reps.size() == 16);
    CHECK(contains_terms(reps, 2, {2, -1, -1}));
    CHECK(contains_terms(reps, 2, {65, -43, -58}));
    CHECK(contains_terms(reps, 20, {8192, -64, -64}));
    CHECK(contains_terms(reps, 20, {9404, -472, -6556}));
    CHECK(contains_terms(reps, 43, {pow2(14), pow2(14) * 16255, pow2(14) * 16511}));
    for (const auto& r : reps) CHECK(sum_of_cubes(r.terms()) == p_value(r.n()));
    CHECK(std::count_if(reps.begin(), reps.end(),
                        [](const Representation& r) { return r.provenance() == "table:scaled"; }) == 8);
  }

  TEST_CASE("polynomial identities") {
    CHECK(verify_polynomial_identity("2t6", samples(-3, 3)));
    const BigInt zero[] = {0};
    CHECK(verify_polynomial_identity("64t3", zero));
    const BigInt some[] = {0, 1, 2, 10};
    CHECK(verify_polynomial_identity("6t-1", some));
    CHECK_THROWS_AS(verify_polynomial_identity("bogus", some), std::invalid_argument);
    // More than degree + 1 distinct points certifies each identity.
    for (const auto& id : polynomial_identities()) {
      const auto pts = samples(-static_cast<long>(id.degree), static_cast<long>(id.degree) + 1);
      CHECK_MESSAGE(verify_polynomial_identity(id.id, pts), id.id);
      const BigInt huge[] = {pow2(200) + 7, -pow2(150)};
      CHECK(verify_polynomial_identity(id.id, huge));
    }
  }

  TEST_CASE("representation invariants") {
    CHECK_THROWS_AS(Representation::make(5, {4, 6, 7}, "x"), std::logic_error);
    CHECK_THROWS_AS(Representation::make(5, {496}, "x"), std::logic_error);
    const auto r = Representation::make(5, {6, 4, 6}, "x");
    CHECK(r.canonical().terms() == std::vector<BigInt>{4, 6, 6});
    CHECK(r.g() == 2);
    CHECK(r.sign_class() == SignClass::AllNonneg);
    CHECK(canonicalize(canonicalize(r)) == canonicalize(r));
    const auto e = Representation::make(3, {0, 1, 3}, "x");
    CHECK(e.canonical() == e);
    const auto m = Representation::make(8, {32, -4, -4}, "x");
    CHECK(m.canonical().terms() == std::vector<BigInt>{-4, -4, 32});
    CHECK(m.sign_class() == SignClass::Mixed);
    CHECK(r.same_solution(Representation::make(5, {6, 6, 4}, "y")));
    const auto set = canonical_set({r, Representation::make(5, {6, 6, 4}, "y"), m});
    CHECK(set.size() == 2);
    CHECK(set[0].provenance() == "x");
  }

  TEST_CASE("reference tables load and verify") {
    const auto t1 = table1();
    CHECK(t1.size() == 70);
    for (const auto& row : t1) {
      CHECK(sum_of_cubes({row.terms[0], row.terms[1], row.terms[2]}) == p_value(row.n));
      CHECK(gcd3(row.terms[0], row.terms[1], row.terms[2]) == row.g);
    }
    const auto t2 = table2();
    CHECK(t2.size() == 9);
    for (const auto& row : t2) CHECK(sum_of_cubes({row.terms[0], row.terms[1], row.terms[2]}) == p_value(row.n));
    CHECK(table3().size() == 39);
    CHECK_THROWS_AS(parse_csv("a,b\n1,2,3\n"), std::runtime_error);
  }
}
