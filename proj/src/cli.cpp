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

#include "cubesum/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubesum/identities.hpp"
#include "cubesum/mersenne.hpp"
#include "cubesum/reference_data.hpp"
#include "cubesum/search.hpp"
#include "cubesum/twocubes.hpp"

namespace cubesum::cli {

using ojson = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Table };

Format resolve_format(const std::string& flag, const Environment& env) {
  if (flag == "json") return Format::Json;
  if (flag == "csv") return Format::Csv;
  if (flag == "table") return Format::Table;
  return env.stdout_is_tty ? Format::Table : Format::Json;
}

/// Emits records in the selected format; the CSV header is written once per
/// term count.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format fmt) : out_(out), fmt_(fmt) {}

  void write(const OutputRecord& r) {
    switch (fmt_) {
      case Format::Json: out_ << to_json(r) << '\n'; break;
      case Format::Csv: write_csv(r); break;
      case Format::Table: write_table(r); break;
    }
  }

 private:
  void write_csv(const OutputRecord& r) {
    const std::size_t width = std::max<std::size_t>(3, r.terms.size());
    if (width != csv_width_) {
      csv_width_ = width;
      out_ << "n,x,y,z" << (width == 4 ? ",w" : "") << ",g,sign_class,source\n";
    }
    out_ << r.n;
    for (std::size_t i = 0; i < width; ++i) out_ << ',' << (i < r.terms.size() ? r.terms[i] : "");
    out_ << ',' << r.g << ',' << r.sign_class << ',' << r.provenance << '\n';
  }

  void write_table(const OutputRecord& r) {
    std::string terms = "(";
    for (std::size_t i = 0; i < r.terms.size(); ++i) terms += (i ? ", " : "") + r.terms[i];
    terms += ")";
    out_ << "n=" << std::left << std::setw(4) << r.n << ' ' << std::setw(48) << terms << " g=" << std::setw(10)
         << r.g << ' ' << std::setw(10) << r.sign_class << ' ' << r.provenance;
    if (r.elapsed) out_ << "  " << *r.elapsed << "s";
    out_ << '\n' << std::right;
  }

  std::ostream& out_;
  Format fmt_;
  std::size_t csv_width_ = 0;
};

unsigned resolve_jobs(unsigned flag, const Environment& env) {
  if (flag > 0) return flag;
  return env.default_jobs.value_or(1);
}

FactorOptions factor_options(const std::string& seed, long timeout_ms, unsigned rho_budget) {
  FactorOptions f;
  f.rho_retry_budget = rho_budget;
  if (seed == "random") {
    f.fresh_randomness = true;
  } else if (!seed.empty()) {
    try {
      f.seed = std::stoull(seed);
    } catch (const std::exception&) {
      throw UsageError("--seed expects an unsigned integer or 'random'");
    }
  }
  if (timeout_ms > 0) f.timeout = std::chrono::milliseconds(timeout_ms);
  return f;
}

// ---------------------------------------------------------------- pvalue

int cmd_pvalue(unsigned n, Format fmt, std::ostream& out) {
  const Natural p = p_value(n);
  const auto filter = x_residue_filter(n);
  std::string filter_text = "{";
  for (std::size_t i = 0; i < filter.allowed.size(); ++i) filter_text += (i ? "," : "") + std::to_string(filter.allowed[i]);
  filter_text += "}";
  switch (fmt) {
    case Format::Json: {
      ojson j = {{"n", n}, {"p", to_decimal(p)}, {"mod9", p_mod9(n)}, {"x_filter_mod3", filter.allowed}};
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "n,p,mod9,x_filter_mod3\n" << n << ',' << to_decimal(p) << ',' << p_mod9(n) << ',' << filter_text << '\n';
      break;
    case Format::Table:
      out << "P_" << n << " = " << to_decimal(p) << '\n'
          << "P_" << n << " mod 9 = " << p_mod9(n) << '\n'
          << "x residue filter (mod 3) = " << filter_text << '\n';
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------- search

struct SearchFlags {
  unsigned n = 0;
  std::string mode = "nonneg";
  std::string x_min, x_max;
  std::optional<unsigned> k;
  unsigned jobs = 0;
  std::string checkpoint;
  std::uint64_t chunk_size = 1024;
  bool no_filter = false;
  std::string seed;
  long timeout_ms = 0;
  std::size_t divisor_cap = kDefaultDivisorCap;
  unsigned rho_budget = 16;
  std::optional<std::uint64_t> stop_after_chunks;
  double progress_interval = 2.0;
  bool timing = false;
  std::string format;
};

int cmd_search(const SearchFlags& f, const Environment& env, std::ostream& out, std::ostream& err) {
  if (f.k && (!f.x_min.empty() || !f.x_max.empty()))
    throw UsageError("--k selects its own x-range; it cannot be combined with --x-min/--x-max");
  SearchConfig cfg;
  cfg.mode = parse_search_mode(f.mode);
  try {
    if (!f.x_min.empty()) cfg.x_min = parse_decimal(f.x_min);
    if (!f.x_max.empty()) cfg.x_max = parse_decimal(f.x_max);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cfg.scale_k = f.k;
  cfg.residue_filter = !f.no_filter;
  cfg.shards = resolve_jobs(f.jobs, env);
  cfg.chunk_size = f.chunk_size;
  if (!f.checkpoint.empty()) cfg.checkpoint_path = f.checkpoint;
  cfg.divisor_cap = f.divisor_cap;
  cfg.factor = factor_options(f.seed, f.timeout_ms, f.rho_budget);
  cfg.max_chunks = f.stop_after_chunks;
  cfg.cancel = env.cancel;
  if (f.progress_interval > 0) {
    cfg.progress_interval = std::chrono::milliseconds(static_cast<long>(f.progress_interval * 1000));
    cfg.on_progress = [&err, interval = cfg.progress_interval](const SearchProgress& p) {
      if (p.elapsed < interval) return;
      err << "[progress] chunks " << p.chunks_done << '/' << p.chunks_total << ", solutions " << p.solutions << ", "
          << std::chrono::duration<double>(p.elapsed).count() << "s\n";
    };
  }

  const auto started = std::chrono::steady_clock::now();
  SolutionSet s;
  try {
    s = search(f.n, cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  const Format fmt = resolve_format(f.format, env);
  RecordWriter writer(out, fmt);
  for (const auto& rep : s.reps) {
    auto rec = make_record(rep, f.mode, s.complete);
    if (f.timing) rec.elapsed = elapsed;
    writer.write(rec);
  }

  ojson incomplete = ojson::array();
  for (const auto& x : s.incomplete_x) incomplete.push_back(to_decimal(x));
  ojson summary = {
      {"n", s.n},
      {"mode", f.mode},
      {"k", s.scale_k ? ojson(*s.scale_k) : ojson(nullptr)},
      {"x_min", to_decimal(s.x_min)},
      {"x_max", to_decimal(s.x_max)},
      {"solutions", s.reps.size()},
      {"nonneg", s.nonneg().size()},
      {"mixed", s.mixed().size()},
      {"complete", s.complete},
      {"interrupted", s.interrupted},
      {"scanned", s.stats.scanned},
      {"filtered", s.stats.filtered},
      {"factored", s.stats.factored},
      {"incomplete_x", incomplete},
  };
  if (f.timing) summary["elapsed"] = elapsed;
  switch (fmt) {
    case Format::Json: out << ojson{{"summary", summary}}.dump() << '\n'; break;
    case Format::Csv: err << "summary: " << summary.dump() << '\n'; break;
    case Format::Table:
      out << "-- n=" << s.n << " mode=" << f.mode << " x in [" << to_decimal(s.x_min) << ", " << to_decimal(s.x_max)
          << "]: " << s.reps.size() << " solutions (" << s.nonneg().size() << " non-negative), "
          << (s.complete ? "complete" : s.interrupted ? "interrupted" : "INCOMPLETE") << ", " << elapsed << "s\n";
      break;
  }
  if (s.interrupted) return kInterrupted;
  if (!s.complete) return kIncomplete;
  return kOk;
}

// ---------------------------------------------------------------- identities

int cmd_identity(unsigned n, const std::string& family, Format fmt, std::ostream& out, std::ostream& err) {
  const auto reps = family.empty() ? three_cube_identity(n) : three_cube_identity(n, family);
  if (reps.empty()) err << "no identity family applies to n = " << n << '\n';
  RecordWriter w(out, fmt);
  for (const auto& r : reps) w.write(make_record(r, "identity", true));
  return kOk;
}

int cmd_fourcubes(unsigned n, Format fmt, std::ostream& out) {
  if (n < 2) throw UsageError("fourcubes needs --n >= 2");
  RecordWriter w(out, fmt);
  w.write(make_record(four_cube_rep(n), "fourcubes", true));
  return kOk;
}

int cmd_twocubes(unsigned n_lo, unsigned n_hi, unsigned max_certified, const FactorOptions& fopts, Format fmt,
                 std::ostream& out, std::ostream& err) {
  RecordWriter w(out, fmt);
  TwoCubeOptions opts;
  opts.max_certified_n = max_certified;
  opts.factor = fopts;
  bool all_certified = true;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    const auto res = search_two_cubes(n, opts);
    if (!res.certified) {
      all_certified = false;
      err << "n=" << n << ": " << res.note << '\n';
    }
    for (const auto& r : res.reps) w.write(make_record(r, "twocubes", res.certified));
  }
  return all_certified ? kOk : kIncomplete;
}

// ---------------------------------------------------------------- verify

std::vector<BigInt> as_vector(const std::array<BigInt, 3>& a) { return {a[0], a[1], a[2]}; }

std::vector<BigInt> sorted(std::vector<BigInt> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool substitution_holds(unsigned n, const std::vector<BigInt>& terms) { return sum_of_cubes(terms) == p_value(n); }

struct VerifyFlags {
  std::string table;
  bool live = false;
  unsigned max_n = 0;
  unsigned jobs = 0;
};

SearchConfig live_config(SearchMode mode, unsigned jobs) {
  SearchConfig cfg;
  cfg.mode = mode;
  cfg.shards = jobs;
  return cfg;
}

int verify_table1(const VerifyFlags& f, unsigned jobs, std::ostream& out) {
  const auto rows = table1();
  std::size_t failures = 0;
  for (const auto& row : rows) {
    const auto terms = as_vector(row.terms);
    const bool sum_ok = substitution_holds(row.n, terms);
    const bool g_ok = gcd3(row.terms[0], row.terms[1], row.terms[2]) == row.g;
    if (!sum_ok || !g_ok) {
      ++failures;
      out << "FAIL table 1 n=" << row.n << ' ' << format_terms(terms) << (sum_ok ? "" : " cube sum != P_n")
          << (g_ok ? "" : " gcd != g") << '\n';
    }
  }
  out << "table 1: " << rows.size() - failures << '/' << rows.size() << " rows verified by substitution and gcd\n";
  if (!f.live) return failures ? kFailure : kOk;

  const unsigned max_n = f.max_n ? f.max_n : 19;
  for (unsigned n = 2; n <= max_n; ++n) {
    std::vector<std::pair<std::vector<BigInt>, Natural>> expected;
    for (const auto& row : rows)
      if (row.n == n) expected.emplace_back(sorted(as_vector(row.terms)), row.g);
    std::sort(expected.begin(), expected.end());
    const auto s = search(n, live_config(SearchMode::Nonneg, jobs));
    std::vector<std::pair<std::vector<BigInt>, Natural>> got;
    for (const auto& r : s.nonneg()) got.emplace_back(r.terms(), r.g());
    std::sort(got.begin(), got.end());
    const bool ok = s.complete && got == expected;
    if (!ok) ++failures;
    out << (ok ? "PASS" : "FAIL") << " live n=" << n << ": " << got.size() << " non-negative solutions, table has "
        << expected.size() << (s.complete ? "" : " (search incomplete)") << '\n';
  }
  return failures ? kFailure : kOk;
}

int verify_table2(const VerifyFlags& f, unsigned jobs, std::ostream& out) {
  const auto rows = table2();
  std::size_t failures = 0;
  for (const auto& row : rows) {
    if (!substitution_holds(row.n, as_vector(row.terms))) {
      ++failures;
      out << "FAIL table 2 n=" << row.n << ' ' << format_terms(as_vector(row.terms)) << '\n';
    }
  }
  out << "table 2: " << rows.size() - failures << '/' << rows.size() << " rows verified by substitution\n";
  std::size_t gap = 0;
  for (const auto& r : special_reps()) {
    if (r.provenance() != "table:gap") continue;
    ++gap;
    if (!substitution_holds(r.n(), r.terms())) {
      ++failures;
      out << "FAIL gap n=" << r.n() << ' ' << format_terms(r.terms()) << '\n';
    }
  }
  out << "gap entries (n = 8, 20): " << gap << " rows verified by substitution\n";
  if (f.live) {
    const unsigned max_n = f.max_n ? f.max_n : 16;
    for (const auto& row : rows) {
      if (row.n > max_n) continue;
      const auto s = search(row.n, live_config(SearchMode::Mixed, jobs));
      const auto want = sorted(as_vector(row.terms));
      const bool found = std::any_of(s.reps.begin(), s.reps.end(), [&](const Representation& r) { return r.terms() == want; });
      if (!found) ++failures;
      out << (found ? "PASS" : "FAIL") << " live mixed n=" << row.n << " x<=" << to_decimal(s.x_max) << ": "
          << format_terms(want) << (found ? " rediscovered" : " not found") << '\n';
    }
  }
  return failures ? kFailure : kOk;
}

int verify_table3(const VerifyFlags& f, unsigned jobs, std::ostream& out) {
  const unsigned max_n = f.max_n ? f.max_n : 16;
  out << "table 3 (informational; counts every distinct triple a non-negative-mode run finds)\n";
  for (const auto& row : table3()) {
    if (row.n > max_n) continue;
    const auto s = search(row.n, live_config(SearchMode::Nonneg, jobs));
    out << "n=" << std::setw(2) << row.n << "  published=" << std::setw(3) << row.count << "  found=" << std::setw(3)
        << s.reps.size() << (s.reps.size() == row.count ? "" : "  (differs)") << '\n';
  }
  return kOk;
}

int verify_reps(std::ostream& out) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // source -> (ok, total)
  for (const auto& r : special_reps()) {
    auto& [ok, total] = tally[r.provenance()];
    ++total;
    if (substitution_holds(r.n(), r.terms()))
      ++ok;
    else
      out << "FAIL " << r.provenance() << " n=" << r.n() << ' ' << format_terms(r.terms()) << '\n';
  }
  bool all = true;
  for (const auto& [src, counts] : tally) {
    out << src << ": " << counts.first << '/' << counts.second << " rows verified by substitution\n";
    all = all && counts.first == counts.second;
  }
  return all ? kOk : kFailure;
}

int cmd_verify(const VerifyFlags& f, const Environment& env, std::ostream& out) {
  const unsigned jobs = resolve_jobs(f.jobs, env);
  if (f.table == "1") return verify_table1(f, jobs, out);
  if (f.table == "2") return verify_table2(f, jobs, out);
  if (f.table == "3") return verify_table3(f, jobs, out);
  return verify_reps(out);
}

}  // namespace

OutputRecord make_record(const Representation& rep, std::string mode, bool complete) {
  OutputRecord r;
  r.n = rep.n();
  r.mode = std::move(mode);
  for (const auto& t : rep.terms()) r.terms.push_back(to_decimal(t));
  r.g = to_decimal(rep.g());
  r.sign_class = std::string(to_string(rep.sign_class()));
  r.provenance = rep.provenance();
  r.complete = complete;
  return r;
}

std::string to_json(const OutputRecord& r) {
  ojson j = {{"n", r.n},
             {"mode", r.mode},
             {"terms", r.terms},
             {"g", r.g},
             {"sign_class", r.sign_class},
             {"provenance", r.provenance},
             {"complete", r.complete}};
  if (r.elapsed) j["elapsed"] = *r.elapsed;
  return j.dump();
}

OutputRecord record_from_json(const std::string& line) {
  try {
    const auto j = ojson::parse(line);
    OutputRecord r;
    r.n = j.at("n").get<unsigned>();
    r.mode = j.at("mode").get<std::string>();
    r.terms = j.at("terms").get<std::vector<std::string>>();
    for (const auto& t : r.terms) parse_decimal(t);
    r.g = j.at("g").get<std::string>();
    parse_decimal(r.g);
    r.sign_class = j.at("sign_class").get<std::string>();
    parse_sign_class(r.sign_class);
    r.provenance = j.at("provenance").get<std::string>();
    r.complete = j.at("complete").get<bool>();
    if (j.contains("elapsed")) r.elapsed = j.at("elapsed").get<double>();
    return r;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("malformed output record: ") + e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Sums of three and four cubes for P_n = 2^(n-1)(2^n - 1)", "cubesum"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"json", "csv", "table"};

  unsigned pv_n = 0;
  std::string pv_format;
  auto* pvalue = app.add_subcommand("pvalue", "Print P_n, P_n mod 9 and the x residue filter");
  pvalue->add_option("--n", pv_n, "Index n >= 1")->required()->check(CLI::PositiveNumber);
  pvalue->add_option("--format", pv_format)->check(CLI::IsMember(formats));

  SearchFlags sf;
  auto* search_cmd = app.add_subcommand("search", "Divisor-method search for P_n = x^3 + y^3 + z^3");
  search_cmd->add_option("--n", sf.n, "Index n >= 1")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--mode", sf.mode, "nonneg or mixed")->check(CLI::IsMember({"nonneg", "mixed"}));
  search_cmd->add_option("--x-min", sf.x_min, "Smallest x (decimal)");
  search_cmd->add_option("--x-max", sf.x_max, "Largest x (decimal)");
  search_cmd->add_option("--k", sf.k, "Search M_{k,n} = 2^(a_n + 3k)(2^n - 1) and lift");
  search_cmd->add_option("--jobs", sf.jobs, "Worker threads (default: $CUBESUM_JOBS or 1)");
  search_cmd->add_option("--checkpoint", sf.checkpoint, "Checkpoint file; resumes when it exists");
  search_cmd->add_option("--chunk-size", sf.chunk_size, "x values per work unit")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--no-filter", sf.no_filter, "Disable the mod-9 residue filter");
  search_cmd->add_option("--seed", sf.seed, "Rho seed, or 'random'");
  search_cmd->add_option("--timeout-per-factor", sf.timeout_ms, "Milliseconds per factorization (0 = none)");
  search_cmd->add_option("--divisor-cap", sf.divisor_cap, "Largest divisor list per residual");
  search_cmd->add_option("--rho-budget", sf.rho_budget, "Rho restarts per cofactor");
  search_cmd->add_option("--stop-after-chunks", sf.stop_after_chunks, "Process this many chunks, then stop");
  search_cmd->add_option("--progress-interval", sf.progress_interval, "Seconds between progress lines (0 = off)");
  search_cmd->add_flag("--timing", sf.timing, "Include elapsed time in records");
  search_cmd->add_option("--format", sf.format)->check(CLI::IsMember(formats));

  unsigned id_n = 0;
  std::string id_family, id_format;
  auto* identity = app.add_subcommand("identity", "Three-cube representations from identity families");
  identity->add_option("--n", id_n)->required()->check(CLI::PositiveNumber);
  identity->add_option("--family", id_family)->check(CLI::IsMember(three_cube_families()));
  identity->add_option("--format", id_format)->check(CLI::IsMember(formats));

  unsigned fc_n = 0;
  std::string fc_format;
  auto* fourcubes = app.add_subcommand("fourcubes", "Four-cube representation of P_n (n >= 2)");
  fourcubes->add_option("--n", fc_n)->required()->check(CLI::PositiveNumber);
  fourcubes->add_option("--format", fc_format)->check(CLI::IsMember(formats));

  unsigned tc_n = 0, tc_max_n = 0, tc_cert = 60, tc_rho = 16;
  std::string tc_format, tc_seed;
  long tc_timeout = 0;
  auto* twocubes = app.add_subcommand("twocubes", "All integer solutions of P_n = x^3 + y^3");
  auto* tc_n_opt = twocubes->add_option("--n", tc_n, "Single index")->check(CLI::PositiveNumber);
  auto* tc_max_opt = twocubes->add_option("--max-n", tc_max_n, "Every n from 2 to this")->check(CLI::PositiveNumber);
  tc_n_opt->excludes(tc_max_opt);
  twocubes->add_option("--max-certified-n", tc_cert, "Largest n whose 2^n - 1 is factored");
  twocubes->add_option("--seed", tc_seed);
  twocubes->add_option("--timeout-per-factor", tc_timeout);
  twocubes->add_option("--rho-budget", tc_rho);
  twocubes->add_option("--format", tc_format)->check(CLI::IsMember(formats));

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Check the embedded reference tables");
  verify->add_option("--table", vf.table, "1, 2, 3 or reps")->required()->check(CLI::IsMember({"1", "2", "3", "reps"}));
  verify->add_flag("--live", vf.live, "Re-derive rows by live search");
  verify->add_option("--max-n", vf.max_n, "Largest n for live checks");
  verify->add_option("--jobs", vf.jobs, "Worker threads for live checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (pvalue->parsed()) return cmd_pvalue(pv_n, resolve_format(pv_format, env), out);
    if (search_cmd->parsed()) return cmd_search(sf, env, out, err);
    if (identity->parsed()) return cmd_identity(id_n, id_family, resolve_format(id_format, env), out, err);
    if (fourcubes->parsed()) return cmd_fourcubes(fc_n, resolve_format(fc_format, env), out);
    if (twocubes->parsed()) {
      if (!tc_n && !tc_max_n) throw UsageError("twocubes needs --n or --max-n");
      // P_1 = 1 = 0^3 + 1^3 is trivial; range scans start at n = 2.
      const unsigned lo = tc_n ? tc_n : 2;
      const unsigned hi = tc_n ? tc_n : tc_max_n;
      return cmd_twocubes(lo, hi, tc_cert, factor_options(tc_seed, tc_timeout, tc_rho), resolve_format(tc_format, env),
                          out, err);
    }
    if (verify->parsed()) return cmd_verify(vf, env, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace cubesum::cli
