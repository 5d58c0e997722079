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

#include "cubesum/reference_data.hpp"

#include <stdexcept>

#include "embedded_tables.hpp"

namespace cubesum {

std::string_view reference_csv(ReferenceTable table) {
  switch (table) {
    case ReferenceTable::Table1: return embedded::kTable1Csv;
    case ReferenceTable::Table2: return embedded::kTable2Csv;
    case ReferenceTable::Table3: return embedded::kTable3Csv;
    case ReferenceTable::SpecialReps: return embedded::kSpecialRepsCsv;
  }
  throw std::invalid_argument("unknown reference table");
}

namespace {

std::vector<std::string> fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(',', start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

unsigned to_unsigned(const std::string& s) { return static_cast<unsigned>(std::stoul(s)); }

std::array<BigInt, 3> xyz(const CsvRow& row) {
  return {parse_decimal(row.at("x")), parse_decimal(row.at("y")), parse_decimal(row.at("z"))};
}

}  // namespace

std::vector<CsvRow> parse_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  std::vector<std::string> header;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto f = fields(line);
    if (header.empty()) {
      header = std::move(f);
      continue;
    }
    if (f.size() != header.size())
      throw std::runtime_error("CSV row has " + std::to_string(f.size()) + " fields, header has " +
                               std::to_string(header.size()) + ": " + std::string(line));
    CsvRow row;
    for (std::size_t i = 0; i < f.size(); ++i) row.emplace(header[i], std::move(f[i]));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Table1Row> table1() {
  std::vector<Table1Row> out;
  for (const auto& row : parse_csv(reference_csv(ReferenceTable::Table1)))
    out.push_back({to_unsigned(row.at("n")), xyz(row), parse_decimal(row.at("g"))});
  return out;
}

std::vector<Table2Row> table2() {
  std::vector<Table2Row> out;
  for (const auto& row : parse_csv(reference_csv(ReferenceTable::Table2)))
    out.push_back({to_unsigned(row.at("n")), xyz(row)});
  return out;
}

std::vector<Table3Row> table3() {
  std::vector<Table3Row> out;
  for (const auto& row : parse_csv(reference_csv(ReferenceTable::Table3)))
    out.push_back({to_unsigned(row.at("n")), to_unsigned(row.at("count"))});
  return out;
}

}  // namespace cubesum
