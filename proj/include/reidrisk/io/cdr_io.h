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

#ifndef REIDRISK_IO_CDR_IO_H_
#define REIDRISK_IO_CDR_IO_H_

#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "absl/status/statusor.h"
#include "reidrisk/raw_dataset.h"

namespace reidrisk::io {

// A column chosen by header name or by zero-based position. The name wins
// when the header has it.
struct ColumnRef {
  std::string name;
  std::optional<size_t> index;
};

struct CdrSchemaConfig {
  ColumnRef caller{"caller_id", std::nullopt};
  // Optional column; rows without it (or with an empty value) have no
  // receiver.
  ColumnRef receiver{"receiver_id", std::nullopt};
  ColumnRef tower{"tower_id", std::nullopt};
  ColumnRef time{"time", std::nullopt};
  std::string time_format = "yyyy-MM-dd HH:mm";
  // Every timestamp is wall-clock time in this zone. The name is recorded,
  // not interpreted.
  std::string timezone = "UTC";
  char delimiter = ',';
};

// Parses CDR text with a header row into a RawDataset whose period runs from
// midnight of the first record's day to midnight after the last record's
// day. Errors carry the offending line number (header is line 1).
absl::StatusOr<RawDataset> ParseCdr(std::istream& in, const CdrSchemaConfig& schema);

// Writes caller_id, receiver_id, tower_id, time rows in user order.
absl::Status WriteCdr(std::ostream& out, const RawDataset& dataset,
                      std::string_view time_format = "yyyy-MM-dd HH:mm",
                      char delimiter = ',');

}  // namespace reidrisk::io

#endif  // REIDRISK_IO_CDR_IO_H_
