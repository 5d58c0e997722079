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

#include <unistd.h>

#include <csignal>
#include <cstdlib>
#include <iostream>

#include "cubesum/cli.hpp"

namespace {

std::atomic<bool> g_cancel{false};

extern "C" void on_signal(int) { g_cancel.store(true); }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);

  cubesum::cli::Environment env;
  env.stdout_is_tty = ::isatty(STDOUT_FILENO) != 0;
  env.cancel = &g_cancel;
  if (const char* jobs = std::getenv("CUBESUM_JOBS")) {
    const long v = std::strtol(jobs, nullptr, 10);
    if (v > 0) env.default_jobs = static_cast<unsigned>(v);
  }
  std::ios::sync_with_stdio(false);
  return cubesum::cli::run({argv + 1, argv + argc}, std::cout, std::cerr, env);
}
