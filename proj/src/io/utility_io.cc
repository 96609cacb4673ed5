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

#include "reidrisk/io/utility_io.h"

#include <string>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/strip.h"
#include "reidrisk/io/csv.h"
#include "reidrisk/strings.h"

namespace reidrisk::io {

absl::StatusOr<UtilityTable> ParseUtilityScores(std::istream& in) {
  CsvReader reader(in, ',');
  auto header = reader.Next();
  if (!header.ok()) return header.status();
  if (!header->has_value()) return absl::InvalidArgumentError("empty utility input");
  std::optional<size_t> level = FindColumn(**header, "spatial_level");
  std::optional<size_t> hours = FindColumn(**header, "temporal_granularity");
  std::optional<size_t> score = FindColumn(**header, "score");
  std::optional<size_t> ci_low = FindColumn(**header, "ci_low");
  std::optional<size_t> ci_high = FindColumn(**header, "ci_high");
  if (!level || !hours || !score) {
    return absl::InvalidArgumentError(
        "line 1: utility header needs spatial_level, temporal_granularity and score");
  }

  UtilityTable table;
  while (true) {
    auto row = reader.Next();
    if (!row.ok()) return row.status();
    if (!row->has_value()) break;
    const std::vector<std::string_view>& fields = **row;
    const size_t line = reader.line();
    auto field = [&](std::optional<size_t> i) -> std::string_view {
      if (!i || *i >= fields.size()) return {};
      return AsStd(absl::StripAsciiWhitespace(AsAbsl(fields[*i])));
    };
    auto number = [&](std::optional<size_t> i, std::string_view what,
                      bool required) -> absl::StatusOr<std::optional<double>> {
      std::string_view text = field(i);
      if (text.empty()) {
        if (required) {
          return absl::InvalidArgumentError(absl::StrCat("line ", line, ": missing ", AsAbsl(what)));
        }
        return std::optional<double>();
      }
      double v = 0;
      if (!absl::SimpleAtod(AsAbsl(text), &v)) {
        return absl::InvalidArgumentError(
            absl::StrCat("line ", line, ": bad ", AsAbsl(what), " '", AsAbsl(text), "'"));
      }
      return std::optional<double>(v);
    };

    GeneralizationProfile profile;
    profile.spatial_level = std::string(field(level));
    if (profile.spatial_level.empty()) {
      return absl::InvalidArgumentError(absl::StrCat("line ", line, ": missing spatial_level"));
    }
    absl::string_view hours_text = AsAbsl(field(hours));
    absl::ConsumeSuffix(&hours_text, "h");
    if (!absl::SimpleAtoi(hours_text, &profile.temporal_hours)) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line, ": bad temporal_granularity '", AsAbsl(field(hours)), "'"));
    }
    if (absl::Status s = ValidateTemporalGranularity(profile.temporal_hours); !s.ok()) {
      return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", s.message()));
    }
    auto mean = number(score, "score", true);
    if (!mean.ok()) return mean.status();
    auto low = number(ci_low, "ci_low", false);
    if (!low.ok()) return low.status();
    auto high = number(ci_high, "ci_high", false);
    if (!high.ok()) return high.status();

    UtilityScore s;
    s.mean = **mean;
    s.ci_low = *low;
    s.ci_high = *high;
    if (absl::Status added = table.Add(profile, s); !added.ok()) {
      return absl::Status(added.code(), absl::StrCat("line ", line, ": ", added.message()));
    }
  }
  return table;
}

}  // namespace reidrisk::io
