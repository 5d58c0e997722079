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

#include "cubesum/factorize.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <string>

namespace cubesum {

FactorizationTimeout::FactorizationTimeout(Natural value)
    : std::runtime_error("factorization timeout: " + to_decimal(value)), value_(std::move(value)) {}

DivisorExplosion::DivisorExplosion(long double count, std::size_t cap)
    : std::runtime_error("divisor explosion: " + std::to_string(static_cast<double>(count)) +
                         " divisors exceed cap " + std::to_string(cap)),
      count_(count) {}

namespace {

using Clock = std::chrono::steady_clock;

struct TrialPrime {
  std::uint64_t p;
  std::uint64_t inverse;  // p^-1 mod 2^64
  std::uint64_t limit;    // UINT64_MAX / p; p | n  iff  n * inverse <= limit
};

std::uint64_t inverse_mod_2_64(std::uint64_t n) {
  std::uint64_t inv = n;  // correct to 3 bits for odd n
  for (int i = 0; i < 5; ++i) inv *= 2 - n * inv;
  return inv;
}

const std::vector<TrialPrime>& trial_primes() {
  static const std::vector<TrialPrime> table = [] {
    std::vector<TrialPrime> t;
    for (auto p : small_primes()) {
      if (p == 2) continue;
      t.push_back({p, inverse_mod_2_64(p), UINT64_MAX / p});
    }
    return t;
  }();
  return table;
}

/// Modular arithmetic in Montgomery form for an odd 64-bit modulus.
class Montgomery {
 public:
  explicit Montgomery(std::uint64_t n) : n_(n), inv_(inverse_mod_2_64(n)) {
    const std::uint64_t r1 = (0 - n) % n;  // 2^64 mod n
    r2_ = static_cast<std::uint64_t>(static_cast<u128>(r1) * r1 % n);
    one_ = r1;
  }

  std::uint64_t reduce(u128 t) const {
    const std::uint64_t m = static_cast<std::uint64_t>(t) * inv_;
    const std::uint64_t hi = static_cast<std::uint64_t>(t >> 64);
    const std::uint64_t mn = static_cast<std::uint64_t>((static_cast<u128>(m) * n_) >> 64);
    return hi >= mn ? hi - mn : hi + (n_ - mn);
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(static_cast<u128>(a) * b); }
  std::uint64_t to(std::uint64_t a) const { return mul(a % n_, r2_); }
  std::uint64_t from(std::uint64_t a) const { return reduce(a); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return (s < a || s >= n_) ? s - n_ : s;
  }
  std::uint64_t pow(std::uint64_t base_m, std::uint64_t e) const {
    std::uint64_t r = one_;
    while (e) {
      if (e & 1) r = mul(r, base_m);
      base_m = mul(base_m, base_m);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t one() const { return one_; }
  std::uint64_t modulus() const { return n_; }

 private:
  std::uint64_t n_;
  std::uint64_t inv_;
  std::uint64_t r2_ = 0;
  std::uint64_t one_ = 0;
};

constexpr std::array<unsigned, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Miller-Rabin with the first 13 primes as bases is deterministic below this.
const Natural& deterministic_bound() {
  static const Natural b("3317044064679887385961981", 10);
  return b;
}

bool miller_rabin_u64(std::uint64_t n) {
  const Montgomery mg(n);
  const std::uint64_t minus_one = mg.to(n - 1);
  const unsigned s = std::countr_zero(n - 1);
  const std::uint64_t d = (n - 1) >> s;
  for (unsigned a : kBases) {
    if (a % n == 0) continue;
    std::uint64_t x = mg.pow(mg.to(a), d);
    if (x == mg.one() || x == minus_one) continue;
    bool witness = true;
    for (unsigned r = 1; r < s && witness; ++r) {
      x = mg.mul(x, x);
      if (x == minus_one) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

bool miller_rabin_round(const Natural& n, const Natural& d, unsigned long s, const Natural& a) {
  const Natural n1 = n - 1;
  Natural x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n1) return true;
  }
  return false;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fold(const Natural& n) {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  const auto limbs = mpz_size(n.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    std::uint64_t s = h ^ mpz_getlimbn(n.get_mpz_t(), i);
    h = splitmix64(s);
  }
  return h;
}

/// Per-call random source for rho restarts.
class RhoRandom {
 public:
  RhoRandom(std::uint64_t value_hash, const FactorOptions& opts)
      : engine_(opts.fresh_randomness ? (static_cast<std::uint64_t>(std::random_device{}()) << 32 |
                                         std::random_device{}())
                                      : value_hash ^ opts.seed) {}
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

class Deadline {
 public:
  explicit Deadline(const FactorOptions& opts) {
    if (opts.timeout) at_ = Clock::now() + *opts.timeout;
  }
  bool expired() const { return at_ && Clock::now() >= *at_; }

 private:
  std::optional<Clock::time_point> at_;
};

constexpr std::uint64_t kRhoBatch = 128;

/// One Brent rho attempt. Returns a factor in (1, n), or 0 on failure.
std::uint64_t brent_rho_u64(std::uint64_t n, std::uint64_t c, std::uint64_t x0, std::uint64_t max_iter,
                            const Deadline& deadline) {
  const Montgomery mg(n);
  const std::uint64_t cm = mg.to(c);
  auto f = [&](std::uint64_t v) { return mg.add(mg.mul(v, v), cm); };
  auto absdiff = [](std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; };

  std::uint64_t y = mg.to(x0), x = y, ys = y, q = mg.one(), g = 1;
  std::uint64_t iters = 0;
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kRhoBatch) {
      ys = y;
      const std::uint64_t m = std::min(kRhoBatch, r - k);
      for (std::uint64_t i = 0; i < m; ++i) {
        y = f(y);
        q = mg.mul(q, absdiff(x, y));
      }
      g = std::gcd(q, n);
      iters += m;
    }
    if (g == 1 && (iters > max_iter || deadline.expired())) return 0;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(absdiff(x, ys), n);
    } while (g == 1);
  }
  return (g == n) ? 0 : g;
}

std::uint64_t iteration_cap(std::size_t bits) {
  const std::size_t shift = std::min<std::size_t>(60, std::max<std::size_t>(20, bits / 4 + 3));
  return std::uint64_t{1} << shift;
}

void split_u64(std::uint64_t n, std::vector<std::uint64_t>& out, const FactorOptions& opts,
               const Deadline& deadline) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  if (const auto s = isqrt_exact(static_cast<u128>(n))) {
    split_u64(*s, out, opts, deadline);
    split_u64(*s, out, opts, deadline);
    return;
  }
  if (const auto r = icbrt(n); static_cast<u128>(r) * r * r == n) {
    for (int i = 0; i < 3; ++i) split_u64(r, out, opts, deadline);
    return;
  }
  RhoRandom rng(fold(from_u64(n)), opts);
  const std::uint64_t cap = iteration_cap(64 - std::countl_zero(n));
  for (unsigned attempt = 0; attempt < opts.rho_retry_budget; ++attempt) {
    if (deadline.expired()) break;
    const std::uint64_t c = 1 + rng.next() % (n - 1);
    const std::uint64_t x0 = rng.next() % n;
    const std::uint64_t d = brent_rho_u64(n, c, x0, cap, deadline);
    if (d > 1 && d < n) {
      split_u64(d, out, opts, deadline);
      split_u64(n / d, out, opts, deadline);
      return;
    }
  }
  throw FactorizationTimeout(from_u64(n));
}

/// One Brent rho attempt on a multi-precision value. Returns 0 on failure.
Natural brent_rho_big(const Natural& n, const Natural& c, const Natural& x0, std::uint64_t max_iter,
                      const Deadline& deadline) {
  auto f = [&](Natural& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  Natural y = x0, x = y, ys = y, q = 1, g = 1, diff;
  std::uint64_t iters = 0;
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kRhoBatch) {
      ys = y;
      const std::uint64_t m = std::min(kRhoBatch, r - k);
      for (std::uint64_t i = 0; i < m; ++i) {
        f(y);
        diff = x - y;
        q *= diff;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      iters += m;
    }
    if (g == 1 && (iters > max_iter || deadline.expired())) return 0;
  }
  if (g == n) {
    do {
      f(ys);
      diff = x - ys;
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return (g == n) ? Natural(0) : g;
}

void split_big(const Natural& n, std::vector<Natural>& out, const FactorOptions& opts,
               const Deadline& deadline) {
  if (n == 1) return;
  if (fits_u64(n)) {
    std::vector<std::uint64_t> parts;
    split_u64(to_u64(n), parts, opts, deadline);
    for (auto p : parts) out.push_back(from_u64(p));
    return;
  }
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  if (const auto s = isqrt_exact(n)) {
    split_big(*s, out, opts, deadline);
    split_big(*s, out, opts, deadline);
    return;
  }
  if (const Natural r = icbrt(n); r * r * r == n) {
    for (int i = 0; i < 3; ++i) split_big(r, out, opts, deadline);
    return;
  }
  RhoRandom rng(fold(n), opts);
  const std::uint64_t cap = iteration_cap(mpz_sizeinbase(n.get_mpz_t(), 2));
  auto draw = [&] {
    Natural v = from_u64(rng.next());
    v = (v << 64) + from_u64(rng.next());
    return v;
  };
  for (unsigned attempt = 0; attempt < opts.rho_retry_budget; ++attempt) {
    if (deadline.expired()) break;
    Natural c = draw() % (n - 1) + 1;
    Natural x0 = draw() % n;
    const Natural d = brent_rho_big(n, c, x0, cap, deadline);
    if (d > 1 && d < n) {
      split_big(d, out, opts, deadline);
      split_big(n / d, out, opts, deadline);
      return;
    }
  }
  throw FactorizationTimeout(n);
}

template <class T>
BasicFactorMap<T> collect(std::vector<T> primes) {
  std::sort(primes.begin(), primes.end());
  BasicFactorMap<T> out;
  for (auto& p : primes) {
    if (!out.empty() && out.back().prime == p)
      ++out.back().exponent;
    else
      out.push_back({std::move(p), 1});
  }
  return out;
}

bool mul_within(std::uint64_t a, std::uint64_t b, std::uint64_t limit, std::uint64_t& out) {
  const u128 prod = static_cast<u128>(a) * b;
  if (prod > limit) return false;
  out = static_cast<std::uint64_t>(prod);
  return true;
}

bool mul_within(const Natural& a, const Natural& b, const Natural& limit, Natural& out) {
  out = a * b;
  return out <= limit;
}

/// Exponent odometer. Digit i advances only while the running product stays
/// within `limit`; lower digits are zero whenever a digit advances, so a
/// failed advance means every larger exponent of that digit fails too.
template <class T>
std::vector<T> odometer(const BasicFactorMap<T>& f, const T* limit, std::size_t cap) {
  std::vector<T> out;
  std::vector<unsigned> exps(f.size(), 0);
  std::vector<T> powers_used(f.size(), T(1));  // prime^exps[i]
  T cur(1), next;
  out.push_back(cur);
  for (;;) {
    std::size_t i = 0;
    for (; i < f.size(); ++i) {
      const bool room = exps[i] < f[i].exponent;
      const bool within = room && (limit ? mul_within(cur, f[i].prime, *limit, next)
                                         : (next = cur * f[i].prime, true));
      if (within) {
        cur = next;
        powers_used[i] *= f[i].prime;
        ++exps[i];
        break;
      }
      cur /= powers_used[i];
      powers_used[i] = T(1);
      exps[i] = 0;
    }
    if (i == f.size()) break;
    if (out.size() >= cap) throw DivisorExplosion(static_cast<long double>(out.size()) + 1, cap);
    out.push_back(cur);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class T>
std::vector<T> all_divisors(const BasicFactorMap<T>& f, std::size_t cap) {
  const long double count = divisor_count(f);
  if (count > static_cast<long double>(cap)) throw DivisorExplosion(count, cap);
  return odometer<T>(f, nullptr, cap + 1);
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < kTrialDivisionBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 43 * 43) return true;
  return miller_rabin_u64(n);
}

bool is_prime(const Natural& n) {
  if (sgn(n) < 0) return false;
  if (fits_u64(n)) return is_prime(to_u64(n));
  for (unsigned p : kBases)
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  const Natural n1 = n - 1;
  const auto s = mpz_scan1(n1.get_mpz_t(), 0);
  const Natural d = n1 >> s;
  for (unsigned a : kBases)
    if (!miller_rabin_round(n, d, s, Natural(a))) return false;
  if (n < deterministic_bound()) return true;
  std::uint64_t state = fold(n);
  const Natural span = n - 3;
  for (int round = 0; round < 65; ++round) {
    Natural a = from_u64(splitmix64(state));
    a = (a << 64) + from_u64(splitmix64(state));
    a = a % span + 2;
    if (!miller_rabin_round(n, d, s, a)) return false;
  }
  return true;
}

FactorMap64 factorize(std::uint64_t n, const FactorOptions& opts) {
  if (n == 0) throw std::domain_error("factorize: argument must be >= 1");
  std::vector<std::uint64_t> primes;
  if (const int tz = std::countr_zero(n); tz > 0) {
    primes.insert(primes.end(), tz, 2);
    n >>= tz;
  }
  for (const auto& tp : trial_primes()) {
    if (tp.p * tp.p > n) break;
    while (n * tp.inverse <= tp.limit) {
      primes.push_back(tp.p);
      n *= tp.inverse;
    }
  }
  if (n > 1) {
    const std::uint64_t bound = std::uint64_t{kTrialDivisionBound} * kTrialDivisionBound;
    if (n < bound) {
      primes.push_back(n);
    } else {
      const Deadline deadline(opts);
      split_u64(n, primes, opts, deadline);
    }
  }
  return collect(std::move(primes));
}

FactorMap factorize(const Natural& n, const FactorOptions& opts) {
  if (n < 1) throw std::domain_error("factorize: argument must be >= 1");
  if (fits_u64(n)) return widen(factorize(to_u64(n), opts));
  std::vector<Natural> primes;
  Natural rest = n;
  if (const auto tz = mpz_scan1(rest.get_mpz_t(), 0); tz > 0) {
    primes.insert(primes.end(), tz, Natural(2));
    rest >>= tz;
  }
  for (const auto& tp : trial_primes()) {
    if (fits_u64(rest)) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), tp.p)) {
      primes.push_back(from_u64(tp.p));
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), tp.p);
    }
  }
  if (fits_u64(rest)) {
    // Remaining small primes are handled by the 64-bit path.
    for (const auto& pp : factorize(to_u64(rest), opts))
      primes.insert(primes.end(), pp.exponent, from_u64(pp.prime));
  } else {
    const Deadline deadline(opts);
    split_big(rest, primes, opts, deadline);
  }
  return collect(std::move(primes));
}

Natural product(const FactorMap& f) {
  Natural r = 1;
  for (const auto& pp : f) {
    Natural t;
    mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    r *= t;
  }
  return r;
}

std::uint64_t product(const FactorMap64& f) {
  std::uint64_t r = 1;
  for (const auto& pp : f)
    for (unsigned i = 0; i < pp.exponent; ++i) r *= pp.prime;
  return r;
}

FactorMap widen(const FactorMap64& f) {
  FactorMap out;
  out.reserve(f.size());
  for (const auto& pp : f) out.push_back({from_u64(pp.prime), pp.exponent});
  return out;
}

std::vector<std::uint64_t> divisors(const FactorMap64& f, std::size_t cap) { return all_divisors(f, cap); }

std::vector<Natural> divisors(const FactorMap& f, std::size_t cap) { return all_divisors(f, cap); }

std::vector<std::uint64_t> divisors_up_to(const FactorMap64& f, std::uint64_t limit, std::size_t cap) {
  if (limit == 0) return {};
  return odometer<std::uint64_t>(f, &limit, cap);
}

std::vector<Natural> divisors_up_to(const FactorMap& f, const Natural& limit, std::size_t cap) {
  if (limit < 1) return {};
  return odometer<Natural>(f, &limit, cap);
}

}  // namespace cubesum
