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

#ifndef REIDRISK_RAW_DATASET_H_
#define REIDRISK_RAW_DATASET_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "reidrisk/types.h"

namespace reidrisk {

// Ingested CDR records grouped by caller. Tower and receiver identifiers are
// interned into dictionaries so that tens of millions of records fit in a
// few hundred megabytes; `Records()` materializes the plain row form.
class RawDataset {
 public:
  static constexpr uint32_t kNoReceiver = UINT32_MAX;

  struct Event {
    uint32_t tower = 0;
    uint32_t receiver = kNoReceiver;
    LocalMinutes time = 0;

    friend auto operator<=>(const Event&, const Event&) = default;
  };

  struct User {
    std::string id;
    std::vector<Event> events;  // sorted by (time, tower, receiver)
  };

  // Accumulates records in any order. Build() groups them by caller, sorts
  // callers lexicographically and fixes the dataset period.
  class Builder {
   public:
    Builder() = default;

    void Add(std::string_view caller_id, std::optional<std::string_view> receiver_id,
             std::string_view tower_id, LocalMinutes timestamp);
    void Add(const RawRecord& record);

    size_t record_count() const { return record_count_; }

    // Period is [midnight of the earliest record, midnight after the latest).
    absl::StatusOr<RawDataset> Build(std::string timezone) &&;
    // Explicit period; every record must fall inside [start, end).
    absl::StatusOr<RawDataset> Build(std::string timezone, LocalMinutes period_start,
                                     LocalMinutes period_end) &&;

   private:
    absl::StatusOr<RawDataset> Finish(std::string timezone,
                                      std::optional<LocalMinutes> start,
                                      std::optional<LocalMinutes> end);

    absl::flat_hash_map<std::string, uint32_t> caller_index_;
    absl::flat_hash_map<std::string, uint32_t> tower_index_;
    absl::flat_hash_map<std::string, uint32_t> receiver_index_;
    std::vector<std::string> callers_;
    std::vector<std::string> towers_;
    std::vector<std::string> receivers_;
    std::vector<std::vector<Event>> events_;
    size_t record_count_ = 0;
  };

  RawDataset() = default;

  const std::vector<User>& users() const { return users_; }
  const std::vector<std::string>& towers() const { return towers_; }
  const std::vector<std::string>& receivers() const { return receivers_; }
  LocalMinutes period_start() const { return period_start_; }
  LocalMinutes period_end() const { return period_end_; }
  const std::string& timezone() const { return timezone_; }
  size_t record_count() const { return record_count_; }

  RawRecord Record(const User& user, const Event& event) const;
  // All records, grouped by caller in user order.
  std::vector<RawRecord> Records() const;

 private:
  std::vector<User> users_;
  std::vector<std::string> towers_;
  std::vector<std::string> receivers_;
  LocalMinutes period_start_ = 0;
  LocalMinutes period_end_ = 0;
  std::string timezone_;
  size_t record_count_ = 0;
};

}  // namespace reidrisk

#endif  // REIDRISK_RAW_DATASET_H_
