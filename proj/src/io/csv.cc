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

#include "reidrisk/io/csv.h"

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "reidrisk/strings.h"

namespace reidrisk::io {

absl::StatusOr<std::vector<std::string_view>> SplitCsvLine(std::string_view line, char delimiter,
                                                           std::string& scratch) {
  std::vector<std::string_view> fields;
  if (line.find('"') == std::string_view::npos) {
    size_t start = 0;
    while (true) {
      size_t pos = line.find(delimiter, start);
      if (pos == std::string_view::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, pos - start));
      start = pos + 1;
    }
    return fields;
  }

  // Quoted path: unescape into scratch, then slice views out of it. Reserve
  // up front so the views stay valid.
  scratch.clear();
  scratch.reserve(line.size());
  std::vector<std::pair<size_t, size_t>> spans;
  size_t i = 0;
  while (true) {
    size_t begin = scratch.size();
    if (i < line.size() && line[i] == '"') {
      ++i;
      while (true) {
        if (i >= line.size()) return absl::InvalidArgumentError("unterminated quoted field");
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            scratch.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        scratch.push_back(line[i++]);
      }
      if (i < line.size() && line[i] != delimiter) {
        return absl::InvalidArgumentError("unexpected character after quoted field");
      }
    } else {
      while (i < line.size() && line[i] != delimiter) scratch.push_back(line[i++]);
    }
    spans.emplace_back(begin, scratch.size() - begin);
    if (i >= line.size()) break;
    ++i;  // delimiter
  }
  for (auto [begin, len] : spans) fields.emplace_back(scratch.data() + begin, len);
  return fields;
}

absl::StatusOr<std::optional<std::vector<std::string_view>>> CsvReader::Next() {
  while (std::getline(in_, buffer_)) {
    ++line_;
    if (!buffer_.empty() && buffer_.back() == '\r') buffer_.pop_back();
    if (absl::StripAsciiWhitespace(buffer_).empty()) continue;
    absl::StatusOr<std::vector<std::string_view>> fields =
        SplitCsvLine(buffer_, delimiter_, unquoted_);
    if (!fields.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_, ": ", fields.status().message()));
    }
    return std::optional<std::vector<std::string_view>>(*std::move(fields));
  }
  return std::optional<std::vector<std::string_view>>();
}

std::string CsvField(std::string_view value, char delimiter) {
  if (value.find_first_of(std::string{delimiter, '"', '\n', '\r'}) == std::string_view::npos) {
    return std::string(value);
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::optional<size_t> FindColumn(const std::vector<std::string_view>& header,
                                 std::string_view name) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (AsStd(absl::StripAsciiWhitespace(AsAbsl(header[i]))) == name) return i;
  }
  return std::nullopt;
}

}  // namespace reidrisk::io
