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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cubesum/checkpoint.hpp"
#include "cubesum/mersenne.hpp"

using namespace cubesum;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name) : path(fs::temp_directory_path() / ("cubesum_test_" + name)) {
    fs::remove(path);
  }
  ~TempFile() { fs::remove(path); }
};

std::vector<std::string> lines_of(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_SUITE("checkpoint") {
  TEST_CASE("record round trip") {
    CheckpointRecord r;
    r.n = 51;
    r.mode = SearchMode::Mixed;
    r.config_digest = "0123456789abcdef";
    r.x_lo = pow2(70);
    r.x_hi = pow2(70) + 1023;
    r.reps = {{BigInt(-5), BigInt(3), pow2(90)}};
    r.stats = {1024, 10, 1014};
    r.incomplete_x = {pow2(70) + 3};
    const auto line = to_json_line(r);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(parse_checkpoint_line(line) == r);
    CHECK_FALSE(parse_checkpoint_line(line.substr(0, line.size() / 2)).has_value());
    CHECK_FALSE(parse_checkpoint_line("{}").has_value());
    CHECK_FALSE(parse_checkpoint_line("").has_value());
  }

  TEST_CASE("missing file reads as empty") {
    CHECK(read_checkpoint(fs::temp_directory_path() / "cubesum_test_does_not_exist").empty());
  }

  TEST_CASE("interrupted run resumes to the same result") {
    TempFile tf("resume.jsonl");
    SearchConfig base;
    base.chunk_size = 16;
    const auto full = search(19, base);

    SearchConfig cfg = base;
    cfg.checkpoint_path = tf.path;
    cfg.max_chunks = 5;
    const auto part = search(19, cfg);
    CHECK(part.interrupted);
    CHECK(lines_of(tf.path).size() == 5);

    cfg.max_chunks = 7;
    cfg.shards = 4;
    CHECK(search(19, cfg).interrupted);

    cfg.max_chunks.reset();
    const auto done = search(19, cfg);
    CHECK(done.complete);
    CHECK(done.reps == full.reps);
    CHECK(done.stats == full.stats);

    // A finished checkpoint replays without new work.
    const auto before = lines_of(tf.path).size();
    CHECK(search(19, cfg).reps == full.reps);
    CHECK(lines_of(tf.path).size() == before);
  }

  TEST_CASE("torn trailing line is ignored and redone") {
    TempFile tf("torn.jsonl");
    SearchConfig cfg;
    cfg.chunk_size = 32;
    cfg.checkpoint_path = tf.path;
    cfg.max_chunks = 3;
    (void)search(17, cfg);
    auto lines = lines_of(tf.path);
    REQUIRE(lines.size() == 3);
    {
      std::ofstream out(tf.path, std::ios::trunc);
      out << lines[0] << '\n' << lines[1] << '\n' << lines[2].substr(0, 40);
    }
    cfg.max_chunks.reset();
    const auto done = search(17, cfg);
    SearchConfig plain;
    plain.chunk_size = 32;
    CHECK(done.reps == search(17, plain).reps);
    CHECK(done.complete);
    for (const auto& l : lines_of(tf.path))
      if (l != lines[2].substr(0, 40)) CHECK(parse_checkpoint_line(l).has_value());
  }

  TEST_CASE("checkpoint from another configuration is rejected") {
    TempFile tf("mismatch.jsonl");
    SearchConfig cfg;
    cfg.checkpoint_path = tf.path;
    cfg.chunk_size = 64;
    cfg.max_chunks = 1;
    (void)search(15, cfg);
    SearchConfig other = cfg;
    other.chunk_size = 128;
    CHECK_THROWS_AS(search(15, other), CheckpointError);
    CHECK_THROWS_AS(search(16, cfg), CheckpointError);
  }

  TEST_CASE("unwritable checkpoint fails before any work") {
    SearchConfig cfg;
    cfg.checkpoint_path = fs::temp_directory_path() / "cubesum_no_such_dir" / "cp.jsonl";
    CHECK_THROWS_AS(search(9, cfg), CheckpointError);
  }
}
