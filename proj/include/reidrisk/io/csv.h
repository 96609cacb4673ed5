// Copyright 2026 The reidrisk Authors
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

#ifndef REIDRISK_IO_CSV_H_
#define REIDRISK_IO_CSV_H_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace reidrisk::io {

// Line-oriented reader for delimiter-separated text with RFC 4180 style
// quoting (no embedded newlines). Tracks physical line numbers, header = 1.
class CsvReader {
 public:
  CsvReader(std::istream& in, char delimiter) : in_(in), delimiter_(delimiter) {}

  // Next non-blank row, or nullopt at end of input.
  absl::StatusOr<std::optional<std::vector<std::string_view>>> Next();

  size_t line() const { return line_; }

 private:
  std::istream& in_;
  char delimiter_;
  std::string buffer_;
  std::string unquoted_;
  size_t line_ = 0;
};

// Splits one line. Views point into `line` or, for quoted fields, into
// `scratch`, which must outlive them and is overwritten.
absl::StatusOr<std::vector<std::string_view>> SplitCsvLine(std::string_view line, char delimiter,
                                                           std::string& scratch);

// Quotes a field when it holds the delimiter, a quote or a line break.
std::string CsvField(std::string_view value, char delimiter = ',');

// Index of `name` in a header row (exact match after trimming), if any.
std::optional<size_t> FindColumn(const std::vector<std::string_view>& header,
                                 std::string_view name);

}  // namespace reidrisk::io

#endif  // REIDRISK_IO_CSV_H_
