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

// Published result tables, embedded into the library at build time from the
// CSV files under data/. See data/README.md for the file formats.

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cubesum/bigmath.hpp"

namespace cubesum {

enum class ReferenceTable { Table1, Table2, Table3, SpecialReps };

std::string_view reference_csv(ReferenceTable table);

using CsvRow = std::map<std::string, std::string>;

/// Minimal CSV reader: first line is the header, fields are comma separated
/// and unquoted, blank lines are skipped. Throws std::runtime_error on a row
/// whose field count differs from the header.
std::vector<CsvRow> parse_csv(std::string_view text);

/// All non-negative solutions for n <= 40, with gcd.
struct Table1Row {
  unsigned n;
  std::array<BigInt, 3> terms;
  Natural g;
};

/// Mixed-sign solutions for n without non-negative ones.
struct Table2Row {
  unsigned n;
  std::array<BigInt, 3> terms;
};

/// Number of solutions reported per n.
struct Table3Row {
  unsigned n;
  unsigned count;
};

std::vector<Table1Row> table1();
std::vector<Table2Row> table2();
std::vector<Table3Row> table3();

}  // namespace cubesum
