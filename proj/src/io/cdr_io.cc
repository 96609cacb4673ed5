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

#include "reidrisk/io/cdr_io.h"

#include <string_view>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "reidrisk/io/csv.h"
#include "reidrisk/io/timestamp_format.h"
#include "reidrisk/strings.h"

namespace reidrisk::io {
namespace {

std::optional<size_t> Resolve(const ColumnRef& ref, const std::vector<std::string_view>& header) {
  if (!ref.name.empty()) {
    if (std::optional<size_t> i = FindColumn(header, ref.name)) return i;
  }
  return ref.index;
}

std::string Describe(const ColumnRef& ref) {
  if (!ref.name.empty()) return ref.name;
  return ref.index ? absl::StrCat("#", *ref.index) : "<unset>";
}

}  // namespace

absl::StatusOr<RawDataset> ParseCdr(std::istream& in, const CdrSchemaConfig& schema) {
  absl::StatusOr<TimestampFormat> format = TimestampFormat::Create(schema.time_format);
  if (!format.ok()) return format.status();

  CsvReader reader(in, schema.delimiter);
  auto header_row = reader.Next();
  if (!header_row.ok()) return header_row.status();
  if (!header_row->has_value()) return absl::InvalidArgumentError("empty CDR input");
  const std::vector<std::string_view>& header = **header_row;

  std::optional<size_t> caller = Resolve(schema.caller, header);
  std::optional<size_t> tower = Resolve(schema.tower, header);
  std::optional<size_t> time = Resolve(schema.time, header);
  std::optional<size_t> receiver = Resolve(schema.receiver, header);
  for (auto [col, ref] : {std::pair{caller, &schema.caller}, std::pair{tower, &schema.tower},
                          std::pair{time, &schema.time}}) {
    if (!col) {
      return absl::InvalidArgumentError(
          absl::StrCat("line 1: CDR header has no column ", Describe(*ref)));
    }
  }
  if (*caller == *tower || *caller == *time || *tower == *time ||
      (receiver && (*receiver == *caller || *receiver == *tower || *receiver == *time))) {
    return absl::InvalidArgumentError("CDR columns must be distinct");
  }

  RawDataset::Builder builder;
  while (true) {
    auto row = reader.Next();
    if (!row.ok()) return row.status();
    if (!row->has_value()) break;
    const std::vector<std::string_view>& fields = **row;
    auto field = [&](size_t i) -> std::string_view {
      return i < fields.size() ? AsStd(absl::StripAsciiWhitespace(AsAbsl(fields[i]))) : std::string_view();
    };
    std::string_view caller_id = field(*caller);
    std::string_view tower_id = field(*tower);
    std::string_view stamp = field(*time);
    if (caller_id.empty() || tower_id.empty() || stamp.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", reader.line(), ": missing ",
                       caller_id.empty() ? "caller" : (tower_id.empty() ? "tower" : "time"),
                       " field"));
    }
    absl::StatusOr<LocalMinutes> t = format->Parse(stamp);
    if (!t.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", reader.line(), ": ", t.status().message()));
    }
    std::optional<std::string_view> receiver_id;
    if (receiver) {
      std::string_view r = field(*receiver);
      if (!r.empty()) receiver_id = r;
    }
    builder.Add(caller_id, receiver_id, tower_id, *t);
  }
  if (builder.record_count() == 0) return absl::InvalidArgumentError("CDR input has no records");
  return std::move(builder).Build(schema.timezone);
}

absl::Status WriteCdr(std::ostream& out, const RawDataset& dataset,
                      std::string_view time_format, char delimiter) {
  absl::StatusOr<TimestampFormat> format = TimestampFormat::Create(time_format);
  if (!format.ok()) return format.status();
  out << "caller_id" << delimiter << "receiver_id" << delimiter << "tower_id" << delimiter
      << "time\n";
  std::string line;
  for (const RawDataset::User& user : dataset.users()) {
    const std::string caller = CsvField(user.id, delimiter);
    for (const RawDataset::Event& e : user.events) {
      line = caller;
      line.push_back(delimiter);
      if (e.receiver != RawDataset::kNoReceiver) {
        line += CsvField(dataset.receivers()[e.receiver], delimiter);
      }
      line.push_back(delimiter);
      line += CsvField(dataset.towers()[e.tower], delimiter);
      line.push_back(delimiter);
      line += format->Format(e.time);
      line.push_back('\n');
      out << line;
    }
  }
  if (!out) return absl::DataLossError("failed writing CDR output");
  return absl::OkStatus();
}

}  // namespace reidrisk::io
