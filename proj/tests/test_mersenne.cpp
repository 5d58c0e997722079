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

#include <set>
#include <stdexcept>

#include "cubesum/mersenne.hpp"

using namespace cubesum;

TEST_SUITE("mersenne") {
  TEST_CASE("p_value examples") {
    CHECK(p_value(1) == 1);
    CHECK(p_value(2) == 6);
    CHECK(p_value(5) == 496);
    CHECK(p_value(8) == 32640);
    CHECK_THROWS_AS(p_value(0), std::invalid_argument);
    CHECK_THROWS_AS(require_index(0), std::invalid_argument);
  }

  TEST_CASE("p_mod9 examples") {
    CHECK(p_mod9(2) == 6);
    CHECK(p_mod9(6) == 0);
    CHECK(p_mod9(13) == 1);
  }

  TEST_CASE("p_mod9 agrees with direct reduction") {
    // Independent recurrence: track 2^(n-1) mod 9 and 2^n mod 9 separately.
    unsigned half = 1, full = 2;
    for (unsigned n = 1; n <= 10000; ++n) {
      const unsigned expect = (half * ((full + 8) % 9)) % 9;
      REQUIRE(p_mod9(n) == expect);
      if (n <= 300) REQUIRE(p_mod9(n) == mpz_class(p_value(n) % 9).get_ui());
      half = half * 2 % 9;
      full = full * 2 % 9;
    }
  }

  TEST_CASE("two-cube residues mod 9 by enumeration") {
    std::set<unsigned> seen;
    for (unsigned a = 0; a < 9; ++a)
      for (unsigned b = 0; b < 9; ++b) seen.insert((a * a * a + b * b * b) % 9);
    const auto& rc = two_cube_residues_mod9();
    CHECK(rc.modulus == 9);
    CHECK(std::vector<unsigned>(seen.begin(), seen.end()) == rc.allowed);
  }

  TEST_CASE("x_residue_filter examples") {
    CHECK(x_residue_filter(8).allowed == std::vector<unsigned>{2});
    CHECK(x_residue_filter(10).allowed == std::vector<unsigned>{1});
    CHECK(x_residue_filter(3).allowed == std::vector<unsigned>{0, 1, 2});
    CHECK(x_residue_filter(8).modulus == 3);
  }

  TEST_CASE("residue filter keeps exactly the admissible x classes") {
    // x mod 3 is allowed iff some x in that class leaves a residual that is a
    // sum of two cubes mod 9. Check directly against the enumeration.
    std::set<unsigned> two;
    for (unsigned a = 0; a < 9; ++a)
      for (unsigned b = 0; b < 9; ++b) two.insert((a * a * a + b * b * b) % 9);
    for (unsigned t = 0; t < 9; ++t) {
      std::vector<unsigned> expect;
      for (unsigned c = 0; c < 3; ++c) {
        bool ok = false;
        for (unsigned x = c; x < 9; x += 3) ok |= two.count((t + 81 - x * x * x % 9) % 9) > 0;
        if (ok) expect.push_back(c);
      }
      REQUIRE(x_residue_filter_for(t).allowed == expect);
    }
    for (unsigned n = 1; n <= 60; ++n) REQUIRE(x_residue_filter(n) == x_residue_filter_for(p_mod9(n)));
  }

  TEST_CASE("sanity checks") {
    CHECK(sanity_checks(1).ok());
    CHECK(sanity_checks(6).ok());
    const auto r = sanity_checks(100);
    CHECK(r.ok());
    CHECK(r.checked == 100);
  }

  TEST_CASE("is_perfect_cube") {
    CHECK(is_perfect_cube(0));
    CHECK(is_perfect_cube(27));
    CHECK_FALSE(is_perfect_cube(28));
    CHECK(is_perfect_cube(cube(pow2(70) + 1)));
    CHECK_FALSE(is_perfect_cube(cube(pow2(70) + 1) + 1));
  }
}
