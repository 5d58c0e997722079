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

// Command-line front end. run() is the whole program minus process setup, so
// tests can drive it in-process with string streams.

#include <atomic>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cubesum/representation.hpp"

namespace cubesum::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,      // verification failed or runtime error
  kIncomplete = 2,   // finished, but some x could not be factored
  kInterrupted = 3,  // stopped early; resumable from the checkpoint
  kUsage = 64,
};

struct Environment {
  bool stdout_is_tty = false;
  std::optional<unsigned> default_jobs;  // from CUBESUM_JOBS
  const std::atomic<bool>* cancel = nullptr;
};

/// One emitted solution. Big integers travel as decimal strings.
struct OutputRecord {
  unsigned n = 0;
  std::string mode;
  std::vector<std::string> terms;
  std::string g;
  std::string sign_class;
  std::string provenance;
  std::optional<double> elapsed;
  bool complete = true;

  bool operator==(const OutputRecord&) const = default;
};

OutputRecord make_record(const Representation& rep, std::string mode, bool complete);
std::string to_json(const OutputRecord& r);
/// Throws std::invalid_argument on malformed input.
OutputRecord record_from_json(const std::string& line);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {});

}  // namespace cubesum::cli
