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

// Line-delimited JSON checkpoint records. One record per finished chunk:
//
//   {"n":18,"mode":"nonneg","config_digest":"9c0f...","x_interval":["0","1023"],
//    "reps":[["144","1224","3192"]],"stats":{"scanned":1024,"filtered":0,"factored":1024},
//    "incomplete_x":[]}
//
// Integers that can exceed 64 bits are decimal strings. Lines that do not
// parse (torn writes) are ignored on read; their chunks are recomputed.

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "cubesum/search.hpp"

namespace cubesum {

struct CheckpointRecord {
  unsigned n = 0;
  SearchMode mode = SearchMode::Nonneg;
  std::string config_digest;
  Natural x_lo, x_hi;  // inclusive
  std::vector<Triple> reps;
  SearchStats stats;
  std::vector<Natural> incomplete_x;

  bool operator==(const CheckpointRecord&) const = default;
};

std::string to_json_line(const CheckpointRecord& r);
/// nullopt for a malformed line.
std::optional<CheckpointRecord> parse_checkpoint_line(const std::string& line);

/// Reads every well-formed record. A missing file yields an empty list.
std::vector<CheckpointRecord> read_checkpoint(const std::filesystem::path& path);

/// Append-only writer; each record is flushed before append() returns.
class CheckpointWriter {
 public:
  explicit CheckpointWriter(const std::filesystem::path& path);
  /// Throws CheckpointError on I/O failure.
  void append(const CheckpointRecord& r);

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

}  // namespace cubesum
