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

#include "cubesum/checkpoint.hpp"

#include <json.hpp>

namespace cubesum {

using nlohmann::json;

std::string to_json_line(const CheckpointRecord& r) {
  json reps = json::array();
  for (const auto& t : r.reps) reps.push_back({to_decimal(t[0]), to_decimal(t[1]), to_decimal(t[2])});
  json incomplete = json::array();
  for (const auto& x : r.incomplete_x) incomplete.push_back(to_decimal(x));
  const json j = {
      {"n", r.n},
      {"mode", std::string(to_string(r.mode))},
      {"config_digest", r.config_digest},
      {"x_interval", {to_decimal(r.x_lo), to_decimal(r.x_hi)}},
      {"reps", std::move(reps)},
      {"stats", {{"scanned", r.stats.scanned}, {"filtered", r.stats.filtered}, {"factored", r.stats.factored}}},
      {"incomplete_x", std::move(incomplete)},
  };
  return j.dump();
}

std::optional<CheckpointRecord> parse_checkpoint_line(const std::string& line) {
  try {
    const json j = json::parse(line);
    CheckpointRecord r;
    r.n = j.at("n").get<unsigned>();
    r.mode = parse_search_mode(j.at("mode").get<std::string>());
    r.config_digest = j.at("config_digest").get<std::string>();
    const auto& iv = j.at("x_interval");
    if (iv.size() != 2) return std::nullopt;
    r.x_lo = parse_decimal(iv[0].get<std::string>());
    r.x_hi = parse_decimal(iv[1].get<std::string>());
    for (const auto& t : j.at("reps")) {
      if (t.size() != 3) return std::nullopt;
      r.reps.push_back({parse_decimal(t[0].get<std::string>()), parse_decimal(t[1].get<std::string>()),
                        parse_decimal(t[2].get<std::string>())});
    }
    const auto& s = j.at("stats");
    r.stats.scanned = s.at("scanned").get<std::uint64_t>();
    r.stats.filtered = s.at("filtered").get<std::uint64_t>();
    r.stats.factored = s.at("factored").get<std::uint64_t>();
    for (const auto& x : j.at("incomplete_x")) r.incomplete_x.push_back(parse_decimal(x.get<std::string>()));
    if (r.x_lo > r.x_hi) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::vector<CheckpointRecord> read_checkpoint(const std::filesystem::path& path) {
  std::vector<CheckpointRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    // Torn writes leave a partial line; that chunk is simply redone.
    if (auto rec = parse_checkpoint_line(line)) out.push_back(std::move(*rec));
  }
  return out;
}

CheckpointWriter::CheckpointWriter(const std::filesystem::path& path) : path_(path) {
  // A torn final line from an earlier crash would otherwise fuse with the
  // next record; start on a fresh line.
  bool needs_newline = false;
  if (std::ifstream probe(path, std::ios::binary | std::ios::ate); probe && probe.tellg() > 0) {
    probe.seekg(-1, std::ios::end);
    needs_newline = probe.get() != '\n';
  }
  out_.open(path, std::ios::app);
  if (!out_) throw CheckpointError("cannot open checkpoint file " + path.string());
  if (needs_newline) out_ << '\n';
}

void CheckpointWriter::append(const CheckpointRecord& r) {
  out_ << to_json_line(r) << '\n';
  out_.flush();
  if (!out_) throw CheckpointError("write to checkpoint file " + path_.string() + " failed");
}

}  // namespace cubesum
