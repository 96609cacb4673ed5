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

#ifndef REIDRISK_IO_TIMESTAMP_FORMAT_H_
#define REIDRISK_IO_TIMESTAMP_FORMAT_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "reidrisk/types.h"

namespace reidrisk::io {

// Wall-clock timestamp pattern. Recognized fields: yyyy (4-digit year),
// yy (2000 + two digits), MM, dd, HH, mm, ss (two digits each); any other
// character must match literally. Seconds are parsed and dropped.
//
//   TimestampFormat::Create("yy-MM-dd HH:mm")  parses "16-12-03 16:50"
class TimestampFormat {
 public:
  static absl::StatusOr<TimestampFormat> Create(std::string_view pattern);

  absl::StatusOr<LocalMinutes> Parse(std::string_view text) const;
  std::string Format(LocalMinutes t) const;

  const std::string& pattern() const { return pattern_; }

 private:
  enum class Field { kLiteral, kYear4, kYear2, kMonth, kDay, kHour, kMinute, kSecond };
  struct Token {
    Field field;
    char literal;
  };

  std::string pattern_;
  std::vector<Token> tokens_;
};

// Minutes since the epoch for a civil date and time.
LocalMinutes CivilToMinutes(int year, unsigned month, unsigned day, int hour, int minute);

}  // namespace reidrisk::io

#endif  // REIDRISK_IO_TIMESTAMP_FORMAT_H_
