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

// Divisor-method search for N = x^3 + y^3 + z^3.
//
// For each x, Q = N - x^3 factors as Q = (y + z)(y^2 - yz + z^2). Every
// divisor d = y + z with d^3 <= 4Q yields the quadratic
//   y, z = (3d +- sqrt(3(4Q/d - d^2))) / 6,
// which is integral exactly when the radical is a perfect square and the
// numerators are divisible by 6. Mixed mode lets x run past the cube root
// and solves |Q| = y'^3 + z'^3 instead, negating the pair when Q < 0.

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubesum/bigmath.hpp"
#include "cubesum/factorize.hpp"
#include "cubesum/representation.hpp"

namespace cubesum {

enum class SearchMode { Nonneg, Mixed };

std::string_view to_string(SearchMode m);
SearchMode parse_search_mode(std::string_view s);

struct SearchProgress {
  std::uint64_t chunks_done = 0;
  std::uint64_t chunks_total = 0;
  std::uint64_t solutions = 0;
  std::chrono::steady_clock::duration elapsed{};
};

struct SearchConfig {
  SearchMode mode = SearchMode::Nonneg;
  /// Defaults: 0 and floor(N^{1/3}) (nonneg) or 2 * floor(N^{1/3}) (mixed).
  std::optional<Natural> x_min;
  std::optional<Natural> x_max;
  /// Search M_{k,n} = 2^{a_n + 3k} (2^n - 1) and lift, see search_scaled.
  std::optional<unsigned> scale_k;
  bool residue_filter = true;
  /// Worker threads.
  unsigned shards = 1;
  /// x values per work unit; also the checkpoint granularity.
  std::uint64_t chunk_size = 1024;
  std::optional<std::filesystem::path> checkpoint_path;
  std::size_t divisor_cap = kDefaultDivisorCap;
  FactorOptions factor;

  // Run control. None of these affect the result set of a finished run.
  /// Stop scheduling after this many chunks have been processed in this run.
  std::optional<std::uint64_t> max_chunks;
  const std::atomic<bool>* cancel = nullptr;
  std::function<void(const SearchProgress&)> on_progress;
  std::chrono::milliseconds progress_interval{2000};
};

struct SearchStats {
  std::uint64_t scanned = 0;   // x values visited
  std::uint64_t filtered = 0;  // x values rejected by the mod-9 filter
  std::uint64_t factored = 0;  // residuals factored
  bool operator==(const SearchStats&) const = default;
  SearchStats& operator+=(const SearchStats& o);
};

using Triple = std::array<BigInt, 3>;

/// Raw engine output for an arbitrary target N.
struct TargetSearchResult {
  Natural target;
  SearchMode mode = SearchMode::Nonneg;
  Natural x_min, x_max;
  std::vector<Triple> triples;  // ascending within each triple, sorted, unique
  bool complete = false;        // every x processed, no factorization failures
  bool interrupted = false;     // stopped early by max_chunks or cancel
  std::vector<Natural> incomplete_x;
  SearchStats stats;
};

/// Canonicalized solutions for P_n with completeness metadata.
struct SolutionSet {
  unsigned n = 0;
  SearchMode mode = SearchMode::Nonneg;
  std::optional<unsigned> scale_k;
  Natural x_min, x_max;  // in the coordinates of the searched target
  std::vector<Representation> reps;
  bool complete = false;
  bool interrupted = false;
  std::vector<Natural> incomplete_x;
  SearchStats stats;

  std::vector<Representation> nonneg() const;
  std::vector<Representation> mixed() const;
};

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// y >= z with y + z = d and y^3 + z^3 = Q, if integral.
/// Throws std::invalid_argument unless Q >= 1, d >= 1 and d | Q.
std::optional<std::pair<BigInt, BigInt>> solve_divisor(const Natural& q, const Natural& d);
std::optional<std::pair<std::int64_t, std::int64_t>> solve_divisor(std::uint64_t q, std::uint64_t d);

struct XOutcome {
  enum class Status { Solved, Filtered, Incomplete };
  Status status = Status::Solved;
  std::vector<std::pair<BigInt, BigInt>> pairs;  // (y, z) with x^3 + y^3 + z^3 = N
};

/// All (y, z) for one x. Nonneg mode requires x^3 <= N (std::invalid_argument
/// otherwise). Factorization failures are reported as Status::Incomplete.
XOutcome representations_for_x(const Natural& target, const Natural& x, SearchMode mode,
                               bool residue_filter = true, const FactorOptions& factor = {},
                               std::size_t divisor_cap = kDefaultDivisorCap);

/// Stable digest of everything that determines a run's result set.
std::string config_digest(const Natural& target, unsigned n_label, const SearchConfig& cfg);

/// Searches an arbitrary positive target. `n_label` tags checkpoint records.
TargetSearchResult search_target(const Natural& target, const SearchConfig& cfg, unsigned n_label = 0);

/// Searches P_n; dispatches to search_scaled when cfg.scale_k is set.
SolutionSet search(unsigned n, const SearchConfig& cfg = {});

/// a_n in {0, 1, 2} with a_n = n - 1 (mod 3).
unsigned scale_residue(unsigned n);
/// m = (n - 1 - a_n - 3k) / 3; std::invalid_argument when negative.
unsigned scale_lift_exponent(unsigned n, unsigned k);
/// M_{k,n} = 2^{a_n + 3k} (2^n - 1).
Natural scaled_target(unsigned n, unsigned k);

/// Searches M_{k,n} and multiplies every term by 2^m, re-verifying against P_n.
SolutionSet search_scaled(unsigned n, unsigned k, SearchConfig cfg = {});

}  // namespace cubesum
