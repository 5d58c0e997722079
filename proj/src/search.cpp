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

#include "cubesum/search.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cubesum/checkpoint.hpp"
#include "cubesum/mersenne.hpp"

namespace cubesum {

std::string_view to_string(SearchMode m) { return m == SearchMode::Nonneg ? "nonneg" : "mixed"; }

SearchMode parse_search_mode(std::string_view s) {
  if (s == "nonneg") return SearchMode::Nonneg;
  if (s == "mixed") return SearchMode::Mixed;
  throw std::invalid_argument("unknown search mode: " + std::string(s));
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  scanned += o.scanned;
  filtered += o.filtered;
  factored += o.factored;
  return *this;
}

std::vector<Representation> SolutionSet::nonneg() const {
  std::vector<Representation> out;
  std::copy_if(reps.begin(), reps.end(), std::back_inserter(out),
               [](const Representation& r) { return r.sign_class() == SignClass::AllNonneg; });
  return out;
}

std::vector<Representation> SolutionSet::mixed() const {
  std::vector<Representation> out;
  std::copy_if(reps.begin(), reps.end(), std::back_inserter(out),
               [](const Representation& r) { return r.sign_class() == SignClass::Mixed; });
  return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> solve_divisor(std::uint64_t q, std::uint64_t d) {
  if (q == 0 || d == 0 || q % d != 0) throw std::invalid_argument("solve_divisor: d must be a positive divisor of Q");
  const u128 four_quotient = static_cast<u128>(q / d) * 4;
  const u128 dd = static_cast<u128>(d) * d;
  if (dd > four_quotient) return std::nullopt;
  // d^3 <= 4Q keeps d below 2^22 and the root below 2^35.
  const auto s = isqrt_exact(3 * (four_quotient - dd));
  if (!s) return std::nullopt;
  const i128 three_d = static_cast<i128>(3) * d;
  const i128 hi = three_d + *s;
  const i128 lo = three_d - static_cast<i128>(*s);
  if (hi % 6 != 0 || lo % 6 != 0) return std::nullopt;
  return std::pair{static_cast<std::int64_t>(hi / 6), static_cast<std::int64_t>(lo / 6)};
}

std::optional<std::pair<BigInt, BigInt>> solve_divisor(const Natural& q, const Natural& d) {
  if (q < 1 || d < 1 || !mpz_divisible_p(q.get_mpz_t(), d.get_mpz_t()))
    throw std::invalid_argument("solve_divisor: d must be a positive divisor of Q");
  const Natural four_quotient = 4 * (q / d);
  const Natural dd = d * d;
  if (dd > four_quotient) return std::nullopt;
  const auto s = isqrt_exact(Natural(3 * (four_quotient - dd)));
  if (!s) return std::nullopt;
  BigInt hi = 3 * d + *s;
  BigInt lo = 3 * d - *s;
  if (!mpz_divisible_ui_p(hi.get_mpz_t(), 6) || !mpz_divisible_ui_p(lo.get_mpz_t(), 6)) return std::nullopt;
  return std::pair<BigInt, BigInt>{hi / 6, lo / 6};
}

namespace {

bool admissible_mod9(unsigned r) { return two_cube_residues_mod9().contains(r); }

/// y^3 + z^3 = a over divisors d = y + z with d^3 <= 4a; pairs negated when
/// `negate` is set. May throw FactorizationTimeout or DivisorExplosion.
void solve_residual(std::uint64_t a, bool negate, const FactorOptions& fopts, std::size_t cap,
                    std::vector<std::pair<std::int64_t, std::int64_t>>& out) {
  const auto fm = factorize(a, fopts);
  const std::uint64_t limit = icbrt(static_cast<u128>(a) * 4);
  for (const auto d : divisors_up_to(fm, limit, cap)) {
    if (auto yz = solve_divisor(a, d)) {
      if (negate) out.emplace_back(-yz->first, -yz->second);
      else out.push_back(*yz);
    }
  }
}

void solve_residual(const Natural& a, bool negate, const FactorOptions& fopts, std::size_t cap,
                    std::vector<std::pair<BigInt, BigInt>>& out) {
  const auto fm = factorize(a, fopts);
  const Natural limit = icbrt(Natural(4 * a));
  for (const auto& d : divisors_up_to(fm, limit, cap)) {
    if (auto yz = solve_divisor(a, d)) {
      if (negate) out.emplace_back(-yz->first, -yz->second);
      else out.push_back(std::move(*yz));
    }
  }
}

Triple make_triple(BigInt x, BigInt y, BigInt z, const Natural& target) {
  Triple t{std::move(x), std::move(y), std::move(z)};
  std::sort(t.begin(), t.end());
  if (cube(t[0]) + cube(t[1]) + cube(t[2]) != target)
    throw std::logic_error("search produced a non-solution " + format_terms({t[0], t[1], t[2]}));
  return t;
}

struct ChunkResult {
  std::vector<Triple> triples;
  SearchStats stats;
  std::vector<Natural> incomplete_x;
};

struct ChunkContext {
  const Natural& target;
  const SearchConfig& cfg;
  const ResidueClass& x_filter;
};

/// Whole chunk in machine words: needs N and every |N - x^3| below 2^64.
bool chunk_fits_u64(const Natural& target, const Natural& hi) {
  return fits_u64(target) && fits_u64(cube(hi)) && mpz_sizeinbase(target.get_mpz_t(), 2) < 63 &&
         mpz_sizeinbase(Natural(cube(hi)).get_mpz_t(), 2) < 63;
}

ChunkResult process_chunk_u64(const ChunkContext& ctx, std::uint64_t lo, std::uint64_t hi) {
  ChunkResult res;
  const auto target = static_cast<std::int64_t>(to_u64(ctx.target));
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::uint64_t x = lo;; ++x) {
    ++res.stats.scanned;
    if (ctx.cfg.residue_filter && !ctx.x_filter.contains(static_cast<unsigned>(x % 3))) {
      ++res.stats.filtered;
    } else {
      const std::int64_t q = target - static_cast<std::int64_t>(x * x * x);
      const std::uint64_t a = q < 0 ? static_cast<std::uint64_t>(-q) : static_cast<std::uint64_t>(q);
      if (a != 0) {
        if (ctx.cfg.residue_filter && !admissible_mod9(static_cast<unsigned>(a % 9))) {
          ++res.stats.filtered;
        } else {
          ++res.stats.factored;
          pairs.clear();
          try {
            solve_residual(a, q < 0, ctx.cfg.factor, ctx.cfg.divisor_cap, pairs);
            for (const auto& [y, z] : pairs)
              res.triples.push_back(make_triple(from_u64(x), from_i64(y), from_i64(z), ctx.target));
          } catch (const FactorizationTimeout&) {
            res.incomplete_x.push_back(from_u64(x));
          } catch (const DivisorExplosion&) {
            res.incomplete_x.push_back(from_u64(x));
          }
        }
      }
    }
    if (x == hi) break;
  }
  return res;
}

ChunkResult process_chunk_big(const ChunkContext& ctx, const Natural& lo, const Natural& hi) {
  ChunkResult res;
  for (Natural x = lo; x <= hi; ++x) {
    ++res.stats.scanned;
    if (ctx.cfg.residue_filter && !ctx.x_filter.contains(mpz_fdiv_ui(x.get_mpz_t(), 3))) {
      ++res.stats.filtered;
      continue;
    }
    auto outcome = representations_for_x(ctx.target, x, ctx.cfg.mode, ctx.cfg.residue_filter, ctx.cfg.factor,
                                         ctx.cfg.divisor_cap);
    switch (outcome.status) {
      case XOutcome::Status::Filtered: ++res.stats.filtered; break;
      case XOutcome::Status::Incomplete:
        ++res.stats.factored;
        res.incomplete_x.push_back(x);
        break;
      case XOutcome::Status::Solved:
        if (ctx.target != cube(x)) ++res.stats.factored;
        for (auto& [y, z] : outcome.pairs) res.triples.push_back(make_triple(x, std::move(y), std::move(z), ctx.target));
        break;
    }
  }
  return res;
}

ChunkResult process_chunk(const ChunkContext& ctx, const Natural& lo, const Natural& hi) {
  ChunkResult res = chunk_fits_u64(ctx.target, hi) ? process_chunk_u64(ctx, to_u64(lo), to_u64(hi))
                                                   : process_chunk_big(ctx, lo, hi);
  std::sort(res.triples.begin(), res.triples.end());
  res.triples.erase(std::unique(res.triples.begin(), res.triples.end()), res.triples.end());
  return res;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct Range {
  Natural x_min, x_max;
};

Range resolve_range(const Natural& target, const SearchConfig& cfg) {
  const Natural root = icbrt(target);
  Range r{cfg.x_min.value_or(Natural(0)), cfg.x_max.value_or(cfg.mode == SearchMode::Nonneg ? root : Natural(2 * root))};
  if (r.x_min < 0) throw std::invalid_argument("x_min must be >= 0");
  if (r.x_min > r.x_max) throw std::invalid_argument("x_min must not exceed x_max");
  if (cfg.mode == SearchMode::Nonneg && r.x_max > root)
    throw std::invalid_argument("nonneg mode requires x^3 <= N (x_max <= " + to_decimal(root) + ")");
  return r;
}

SolutionSet to_solution_set(unsigned n, const TargetSearchResult& r, const BigInt& lift, const std::string& provenance) {
  SolutionSet s;
  s.n = n;
  s.mode = r.mode;
  s.x_min = r.x_min;
  s.x_max = r.x_max;
  s.complete = r.complete;
  s.interrupted = r.interrupted;
  s.incomplete_x = r.incomplete_x;
  s.stats = r.stats;
  std::vector<Representation> reps;
  for (const auto& t : r.triples) reps.push_back(Representation::make(n, {t[0] * lift, t[1] * lift, t[2] * lift}, provenance));
  s.reps = canonical_set(std::move(reps));
  return s;
}

}  // namespace

XOutcome representations_for_x(const Natural& target, const Natural& x, SearchMode mode, bool residue_filter,
                               const FactorOptions& factor, std::size_t divisor_cap) {
  if (x < 0) throw std::invalid_argument("x must be >= 0");
  const BigInt q = target - cube(x);
  if (mode == SearchMode::Nonneg && q < 0) throw std::invalid_argument("nonneg mode requires x^3 <= N");
  XOutcome out;
  if (q == 0) return out;
  const bool negate = q < 0;
  const Natural a = abs(q);
  if (residue_filter && !admissible_mod9(mpz_fdiv_ui(a.get_mpz_t(), 9))) {
    out.status = XOutcome::Status::Filtered;
    return out;
  }
  try {
    if (fits_u64(a)) {
      std::vector<std::pair<std::int64_t, std::int64_t>> small;
      solve_residual(to_u64(a), negate, factor, divisor_cap, small);
      for (const auto& [y, z] : small) out.pairs.emplace_back(from_i64(y), from_i64(z));
    } else {
      solve_residual(a, negate, factor, divisor_cap, out.pairs);
    }
  } catch (const FactorizationTimeout&) {
    out.status = XOutcome::Status::Incomplete;
    out.pairs.clear();
  } catch (const DivisorExplosion&) {
    out.status = XOutcome::Status::Incomplete;
    out.pairs.clear();
  }
  return out;
}

std::string config_digest(const Natural& target, unsigned n_label, const SearchConfig& cfg) {
  const Range r = resolve_range(target, cfg);
  std::string s = "cubesum-search-v1";
  s += "|n=" + std::to_string(n_label);
  s += "|target=" + to_decimal(target);
  s += "|mode=" + std::string(to_string(cfg.mode));
  s += "|x=" + to_decimal(r.x_min) + ".." + to_decimal(r.x_max);
  s += "|k=" + (cfg.scale_k ? std::to_string(*cfg.scale_k) : std::string("-"));
  s += "|filter=" + std::to_string(cfg.residue_filter);
  s += "|chunk=" + std::to_string(cfg.chunk_size);
  s += "|cap=" + std::to_string(cfg.divisor_cap);
  s += "|rho=" + std::to_string(cfg.factor.rho_retry_budget);
  s += "|seed=" + (cfg.factor.fresh_randomness ? std::string("fresh") : std::to_string(cfg.factor.seed));
  s += "|timeout=" + (cfg.factor.timeout ? std::to_string(cfg.factor.timeout->count()) : std::string("-"));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(s)));
  return buf;
}

TargetSearchResult search_target(const Natural& target, const SearchConfig& cfg, unsigned n_label) {
  if (target < 1) throw std::invalid_argument("search target must be >= 1");
  if (cfg.chunk_size == 0) throw std::invalid_argument("chunk_size must be >= 1");
  if (cfg.shards == 0) throw std::invalid_argument("shards must be >= 1");
  const Range range = resolve_range(target, cfg);
  const ResidueClass x_filter = x_residue_filter_for(mpz_fdiv_ui(target.get_mpz_t(), 9));
  const Natural chunk = from_u64(cfg.chunk_size);
  const Natural span = range.x_max - range.x_min + 1;
  const Natural chunk_count_big = (span + chunk - 1) / chunk;
  if (!fits_u64(chunk_count_big)) throw std::invalid_argument("x-range has too many chunks");
  const std::uint64_t chunk_count = to_u64(chunk_count_big);
  auto chunk_bounds = [&](std::uint64_t i) {
    Natural lo = range.x_min + from_u64(i) * chunk;
    Natural hi = lo + chunk - 1;
    if (hi > range.x_max) hi = range.x_max;
    return std::pair{lo, hi};
  };

  const std::string digest = config_digest(target, n_label, cfg);
  std::vector<std::optional<ChunkResult>> results(chunk_count);
  std::optional<CheckpointWriter> writer;
  if (cfg.checkpoint_path) {
    for (auto& rec : read_checkpoint(*cfg.checkpoint_path)) {
      if (rec.config_digest != digest || rec.n != n_label || rec.mode != cfg.mode)
        throw CheckpointError("checkpoint " + cfg.checkpoint_path->string() +
                              " was written by a different search configuration");
      const Natural offset = rec.x_lo - range.x_min;
      const Natural idx = offset / chunk;
      if (offset < 0 || offset % chunk != 0 || idx >= chunk_count_big || chunk_bounds(to_u64(idx)).second != rec.x_hi)
        throw CheckpointError("checkpoint interval [" + to_decimal(rec.x_lo) + ", " + to_decimal(rec.x_hi) +
                              "] does not match the chunk grid");
      results[to_u64(idx)] = ChunkResult{std::move(rec.reps), rec.stats, std::move(rec.incomplete_x)};
    }
    writer.emplace(*cfg.checkpoint_path);
  }

  std::vector<std::uint64_t> pending;
  for (std::uint64_t i = 0; i < chunk_count; ++i)
    if (!results[i]) pending.push_back(i);

  const ChunkContext ctx{target, cfg, x_filter};
  const auto started = std::chrono::steady_clock::now();
  auto last_report = started;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> claimed{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::uint64_t done = chunk_count - pending.size();
  std::uint64_t found = 0;
  for (const auto& r : results)
    if (r) found += r->triples.size();

  auto worker = [&] {
    while (!stop.load()) {
      if (cfg.cancel && cfg.cancel->load()) break;
      if (cfg.max_chunks && claimed.fetch_add(1) >= *cfg.max_chunks) break;
      const std::size_t i = next.fetch_add(1);
      if (i >= pending.size()) break;
      const std::uint64_t idx = pending[i];
      const auto [lo, hi] = chunk_bounds(idx);
      ChunkResult res;
      try {
        res = process_chunk(ctx, lo, hi);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
        break;
      }
      std::lock_guard lock(mu);
      if (writer) {
        try {
          writer->append({n_label, cfg.mode, digest, lo, hi, res.triples, res.stats, res.incomplete_x});
        } catch (...) {
          if (!failure) failure = std::current_exception();
          stop = true;
          break;
        }
      }
      found += res.triples.size();
      results[idx] = std::move(res);
      ++done;
      const auto now = std::chrono::steady_clock::now();
      if (cfg.on_progress && now - last_report >= cfg.progress_interval) {
        last_report = now;
        cfg.on_progress({done, chunk_count, found, now - started});
      }
    }
  };

  if (cfg.shards == 1 || pending.size() <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    const auto threads = std::min<std::size_t>(cfg.shards, pending.size());
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  if (cfg.on_progress) cfg.on_progress({done, chunk_count, found, std::chrono::steady_clock::now() - started});

  TargetSearchResult out;
  out.target = target;
  out.mode = cfg.mode;
  out.x_min = range.x_min;
  out.x_max = range.x_max;
  for (auto& r : results) {
    if (!r) {
      out.interrupted = true;
      continue;
    }
    out.stats += r->stats;
    out.triples.insert(out.triples.end(), r->triples.begin(), r->triples.end());
    out.incomplete_x.insert(out.incomplete_x.end(), r->incomplete_x.begin(), r->incomplete_x.end());
  }
  std::sort(out.triples.begin(), out.triples.end());
  out.triples.erase(std::unique(out.triples.begin(), out.triples.end()), out.triples.end());
  out.complete = !out.interrupted && out.incomplete_x.empty();
  return out;
}

unsigned scale_residue(unsigned n) {
  require_index(n);
  return (n - 1) % 3;
}

unsigned scale_lift_exponent(unsigned n, unsigned k) {
  const unsigned a = scale_residue(n);
  if (n - 1 < a + 3 * k)
    throw std::invalid_argument("scale k = " + std::to_string(k) + " is too large for n = " + std::to_string(n));
  return (n - 1 - a - 3 * k) / 3;
}

Natural scaled_target(unsigned n, unsigned k) {
  scale_lift_exponent(n, k);
  return pow2(scale_residue(n) + 3 * k) * (pow2(n) - 1);
}

SolutionSet search_scaled(unsigned n, unsigned k, SearchConfig cfg) {
  const unsigned m = scale_lift_exponent(n, k);
  cfg.scale_k = k;
  const auto raw = search_target(scaled_target(n, k), cfg, n);
  auto s = to_solution_set(n, raw, pow2(m), "search:scaled-k" + std::to_string(k));
  s.scale_k = k;
  return s;
}

SolutionSet search(unsigned n, const SearchConfig& cfg) {
  if (cfg.scale_k) return search_scaled(n, *cfg.scale_k, cfg);
  const auto raw = search_target(p_value(n), cfg, n);
  return to_solution_set(n, raw, BigInt(1), "search");
}

}  // namespace cubesum
