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

#include "cubesum/mersenne.hpp"
#include "cubesum/twocubes.hpp"
#include "oracles.hpp"

using namespace cubesum;

namespace {

std::vector<std::vector<BigInt>> terms_of(const TwoCubeResult& r) {
  std::vector<std::vector<BigInt>> out;
  for (const auto& rep : r.reps) out.push_back(rep.terms());
  return out;
}

}  // namespace

TEST_SUITE("twocubes") {
  TEST_CASE("examples") {
    auto r = search_two_cubes(3);
    CHECK(r.certified);
    CHECK(terms_of(r) == std::vector<std::vector<BigInt>>{{1, 3}});
    r = search_two_cubes(7);
    CHECK(terms_of(r) == std::vector<std::vector<BigInt>>{{-24, 28}});
    CHECK(r.reps[0].provenance() == "search:two-cubes");
    r = search_two_cubes(9);
    CHECK(terms_of(r) == std::vector<std::vector<BigInt>>{{-44, 60}});
    r = search_two_cubes(5);
    CHECK(r.certified);
    CHECK(r.reps.empty());
  }

  TEST_CASE("beyond the certified range") {
    TwoCubeOptions opts;
    opts.max_certified_n = 20;
    const auto r = search_two_cubes(21, opts);
    CHECK_FALSE(r.certified);
    CHECK(r.reps.empty());
    CHECK_FALSE(r.note.empty());
  }

  TEST_CASE("divisor method equals brute force for N <= 2*10^5") {
    const auto brute = oracle::two_cubes_up_to(200000);
    for (std::int64_t n = 1; n <= 200000; ++n) {
      const auto got = two_cube_solutions(Natural(static_cast<long>(n)));
      std::vector<oracle::Pair64> have;
      for (const auto& [x, y] : got) have.emplace_back(x.get_si(), y.get_si());
      const auto it = brute.find(n);
      REQUIRE(have == (it == brute.end() ? std::vector<oracle::Pair64>{} : it->second));
    }
  }

  TEST_CASE("pairs beyond the naive cube-root bound") {
    // 577^3 - 576^3: both terms exceed (4N)^(1/3) by far.
    const auto got = two_cube_solutions(Natural(997057));
    CHECK(std::find(got.begin(), got.end(), std::pair<BigInt, BigInt>{-576, 577}) != got.end());
  }

  TEST_CASE("every emitted pair verifies") {
    for (unsigned n = 1; n <= 40; ++n)
      for (const auto& rep : search_two_cubes(n).reps) REQUIRE(sum_of_cubes(rep.terms()) == p_value(n));
  }
}
