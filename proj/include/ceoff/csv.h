// Copyright 2026 The ceoff Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CEOFF_CSV_H_
#define CEOFF_CSV_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ceoff {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const CsvTable&, const CsvTable&) = default;
};

// Shortest "%.*g" rendering that parses back to the same double, with '.'
// as the decimal separator regardless of locale.
std::string FormatNumber(double value);

// RFC 4180 quoting; '\n' line endings.
std::string ToCsvString(const CsvTable& table);
// Throws ParseError on ragged rows or a broken quote.
CsvTable ParseCsv(std::string_view text);

// Throws IoError when the file cannot be written or read.
void WriteCsv(const CsvTable& table, const std::filesystem::path& path);
CsvTable ReadCsv(const std::filesystem::path& path);

}  // namespace ceoff

#endif  // CEOFF_CSV_H_
