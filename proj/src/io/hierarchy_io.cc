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

#include "reidrisk/io/hierarchy_io.h"

#include <string>
#include <utility>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "reidrisk/io/csv.h"
#include "reidrisk/strings.h"

namespace reidrisk::io {

absl::StatusOr<SpatialHierarchy> ParseSpatialMap(std::istream& in) {
  CsvReader reader(in, ',');
  auto header = reader.Next();
  if (!header.ok()) return header.status();
  if (!header->has_value()) return absl::InvalidArgumentError("empty hierarchy input");
  if ((*header)->size() < 2) {
    return absl::InvalidArgumentError("line 1: hierarchy needs a tower column and a level");
  }
  std::vector<std::string> levels;
  for (size_t i = 1; i < (*header)->size(); ++i) {
    levels.emplace_back(AsStd(absl::StripAsciiWhitespace(AsAbsl((**header)[i]))));
  }

  std::vector<SpatialHierarchy::Row> rows;
  while (true) {
    auto row = reader.Next();
    if (!row.ok()) return row.status();
    if (!row->has_value()) break;
    const std::vector<std::string_view>& fields = **row;
    if (fields.size() != levels.size() + 1) {
      return absl::InvalidArgumentError(absl::StrCat("line ", reader.line(), ": expected ",
                                                     levels.size() + 1, " fields, got ",
                                                     fields.size()));
    }
    SpatialHierarchy::Row r;
    r.tower_id = std::string(AsStd(absl::StripAsciiWhitespace(AsAbsl(fields[0]))));
    for (size_t i = 1; i < fields.size(); ++i) {
      r.zones.emplace_back(AsStd(absl::StripAsciiWhitespace(AsAbsl(fields[i]))));
    }
    rows.push_back(std::move(r));
  }
  return SpatialHierarchy::Create(std::move(levels), std::move(rows));
}

absl::Status WriteSpatialMap(std::ostream& out, const SpatialHierarchy& hierarchy) {
  out << "tower_id";
  for (const std::string& level : hierarchy.levels()) out << ',' << CsvField(level);
  out << '\n';
  for (const SpatialHierarchy::Row& row : hierarchy.Rows()) {
    out << CsvField(row.tower_id);
    for (const std::string& zone : row.zones) out << ',' << CsvField(zone);
    out << '\n';
  }
  if (!out) return absl::DataLossError("failed writing hierarchy output");
  return absl::OkStatus();
}

}  // namespace reidrisk::io
