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

#include "reidrisk/io/timestamp_format.h"
#include "reidrisk/strings.h"

#include <chrono>
#include <cstdio>

#include "absl/strings/str_cat.h"

namespace reidrisk::io {
namespace {

bool ReadDigits(std::string_view text, size_t& pos, int width, int& value) {
  if (pos + static_cast<size_t>(width) > text.size()) return false;
  value = 0;
  for (int i = 0; i < width; ++i) {
    char c = text[pos + static_cast<size_t>(i)];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  pos += static_cast<size_t>(width);
  return true;
}

}  // namespace

LocalMinutes CivilToMinutes(int year, unsigned month, unsigned day, int hour, int minute) {
  using namespace std::chrono;
  sys_days d{year_month_day{std::chrono::year{year}, std::chrono::month{month},
                            std::chrono::day{day}}};
  return static_cast<LocalMinutes>(d.time_since_epoch().count()) * kMinutesPerDay +
         hour * kMinutesPerHour + minute;
}

absl::StatusOr<TimestampFormat> TimestampFormat::Create(std::string_view pattern) {
  TimestampFormat f;
  f.pattern_ = std::string(pattern);
  bool year = false, month = false, day = false, hour = false, minute = false;
  for (size_t i = 0; i < pattern.size();) {
    std::string_view rest = pattern.substr(i);
    if (rest.starts_with("yyyy")) {
      f.tokens_.push_back({Field::kYear4, 0});
      year = true;
      i += 4;
    } else if (rest.starts_with("yy")) {
      f.tokens_.push_back({Field::kYear2, 0});
      year = true;
      i += 2;
    } else if (rest.starts_with("MM")) {
      f.tokens_.push_back({Field::kMonth, 0});
      month = true;
      i += 2;
    } else if (rest.starts_with("dd")) {
      f.tokens_.push_back({Field::kDay, 0});
      day = true;
      i += 2;
    } else if (rest.starts_with("HH")) {
      f.tokens_.push_back({Field::kHour, 0});
      hour = true;
      i += 2;
    } else if (rest.starts_with("mm")) {
      f.tokens_.push_back({Field::kMinute, 0});
      minute = true;
      i += 2;
    } else if (rest.starts_with("ss")) {
      f.tokens_.push_back({Field::kSecond, 0});
      i += 2;
    } else {
      f.tokens_.push_back({Field::kLiteral, pattern[i]});
      ++i;
    }
  }
  if (!(year && month && day && hour && minute)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "timestamp format '", AsAbsl(pattern), "' needs year, month, day, hour and minute fields"));
  }
  return f;
}

absl::StatusOr<LocalMinutes> TimestampFormat::Parse(std::string_view text) const {
  int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
  size_t pos = 0;
  for (const Token& t : tokens_) {
    bool ok = true;
    switch (t.field) {
      case Field::kLiteral:
        ok = pos < text.size() && text[pos] == t.literal;
        ++pos;
        break;
      case Field::kYear4:
        ok = ReadDigits(text, pos, 4, year);
        break;
      case Field::kYear2:
        ok = ReadDigits(text, pos, 2, year);
        year += 2000;
        break;
      case Field::kMonth:
        ok = ReadDigits(text, pos, 2, month);
        break;
      case Field::kDay:
        ok = ReadDigits(text, pos, 2, day);
        break;
      case Field::kHour:
        ok = ReadDigits(text, pos, 2, hour);
        break;
      case Field::kMinute:
        ok = ReadDigits(text, pos, 2, minute);
        break;
      case Field::kSecond:
        ok = ReadDigits(text, pos, 2, second);
        break;
    }
    if (!ok) {
      return absl::InvalidArgumentError(
          absl::StrCat("timestamp '", AsAbsl(text), "' does not match format '", pattern_, "'"));
    }
  }
  if (pos != text.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("trailing characters in timestamp '", AsAbsl(text), "'"));
  }
  std::chrono::year_month_day ymd{std::chrono::year{year},
                                  std::chrono::month{static_cast<unsigned>(month)},
                                  std::chrono::day{static_cast<unsigned>(day)}};
  if (!ymd.ok() || hour > 23 || minute > 59 || second > 59) {
    return absl::InvalidArgumentError(absl::StrCat("invalid date or time '", AsAbsl(text), "'"));
  }
  return CivilToMinutes(year, static_cast<unsigned>(month), static_cast<unsigned>(day), hour,
                        minute);
}

std::string TimestampFormat::Format(LocalMinutes t) const {
  using namespace std::chrono;
  LocalMinutes day_start = FloorToDay(t);
  year_month_day ymd{sys_days{days{day_start / kMinutesPerDay}}};
  int64_t minute_of_day = t - day_start;
  std::string out;
  char buf[8];
  auto two = [&](int v) {
    std::snprintf(buf, sizeof(buf), "%02d", v);
    out += buf;
  };
  for (const Token& tok : tokens_) {
    switch (tok.field) {
      case Field::kLiteral:
        out.push_back(tok.literal);
        break;
      case Field::kYear4:
        std::snprintf(buf, sizeof(buf), "%04d", static_cast<int>(ymd.year()));
        out += buf;
        break;
      case Field::kYear2:
        two(static_cast<int>(ymd.year()) % 100);
        break;
      case Field::kMonth:
        two(static_cast<int>(static_cast<unsigned>(ymd.month())));
        break;
      case Field::kDay:
        two(static_cast<int>(static_cast<unsigned>(ymd.day())));
        break;
      case Field::kHour:
        two(static_cast<int>(minute_of_day / kMinutesPerHour));
        break;
      case Field::kMinute:
        two(static_cast<int>(minute_of_day % kMinutesPerHour));
        break;
      case Field::kSecond:
        two(0);
        break;
    }
  }
  return out;
}

}  // namespace reidrisk::io
