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

#include "reidrisk/raw_dataset.h"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>

#include "absl/strings/str_cat.h"
#include "reidrisk/strings.h"

namespace reidrisk {
namespace {

uint32_t Intern(std::string_view key, absl::flat_hash_map<std::string, uint32_t>& index,
                std::vector<std::string>& names) {
  if (auto it = index.find(AsAbsl(key)); it != index.end()) return it->second;
  auto id = static_cast<uint32_t>(names.size());
  index.emplace(std::string(key), id);
  names.emplace_back(key);
  return id;
}

}  // namespace

void RawDataset::Builder::Add(std::string_view caller_id,
                              std::optional<std::string_view> receiver_id,
                              std::string_view tower_id, LocalMinutes timestamp) {
  uint32_t caller = Intern(caller_id, caller_index_, callers_);
  if (caller == events_.size()) events_.emplace_back();
  Event event;
  event.tower = Intern(tower_id, tower_index_, towers_);
  if (receiver_id.has_value()) {
    event.receiver = Intern(*receiver_id, receiver_index_, receivers_);
  }
  event.time = timestamp;
  events_[caller].push_back(event);
  ++record_count_;
}

void RawDataset::Builder::Add(const RawRecord& record) {
  std::optional<std::string_view> receiver;
  if (record.receiver_id) receiver = *record.receiver_id;
  Add(record.caller_id, receiver, record.tower_id, record.timestamp);
}

absl::StatusOr<RawDataset> RawDataset::Builder::Build(std::string timezone) && {
  return Finish(std::move(timezone), std::nullopt, std::nullopt);
}

absl::StatusOr<RawDataset> RawDataset::Builder::Build(std::string timezone,
                                                      LocalMinutes period_start,
                                                      LocalMinutes period_end) && {
  if (period_end <= period_start) {
    return absl::InvalidArgumentError("dataset period is empty");
  }
  return Finish(std::move(timezone), period_start, period_end);
}

absl::StatusOr<RawDataset> RawDataset::Builder::Finish(
    std::string timezone, std::optional<LocalMinutes> start,
    std::optional<LocalMinutes> end) {
  if (record_count_ == 0) return absl::InvalidArgumentError("dataset has no records");
  for (const std::string& id : callers_) {
    if (id.empty()) return absl::InvalidArgumentError("empty caller id");
  }
  for (const std::string& id : towers_) {
    if (id.empty()) return absl::InvalidArgumentError("empty tower id");
  }

  LocalMinutes lo = INT64_MAX;
  LocalMinutes hi = INT64_MIN;
  for (const auto& events : events_) {
    for (const Event& e : events) {
      lo = std::min(lo, e.time);
      hi = std::max(hi, e.time);
    }
  }
  RawDataset out;
  out.period_start_ = start.value_or(FloorToDay(lo));
  out.period_end_ = end.value_or(FloorToDay(hi) + kMinutesPerDay);
  if (lo < out.period_start_ || hi >= out.period_end_) {
    return absl::InvalidArgumentError(
        absl::StrCat("record timestamps [", lo, ", ", hi, "] fall outside the dataset period [",
                     out.period_start_, ", ", out.period_end_, ")"));
  }

  // Re-number towers and receivers in lexicographic order so the layout does
  // not depend on input row order.
  auto sorted_permutation = [](const std::vector<std::string>& names) {
    std::vector<uint32_t> order(names.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](uint32_t a, uint32_t b) { return names[a] < names[b]; });
    std::vector<uint32_t> rank(names.size());
    for (uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    return std::make_pair(order, rank);
  };
  auto [tower_order, tower_rank] = sorted_permutation(towers_);
  auto [receiver_order, receiver_rank] = sorted_permutation(receivers_);
  for (uint32_t i : tower_order) out.towers_.push_back(std::move(towers_[i]));
  for (uint32_t i : receiver_order) out.receivers_.push_back(std::move(receivers_[i]));

  std::vector<uint32_t> caller_order(callers_.size());
  std::iota(caller_order.begin(), caller_order.end(), 0);
  std::sort(caller_order.begin(), caller_order.end(),
            [&](uint32_t a, uint32_t b) { return callers_[a] < callers_[b]; });
  out.users_.reserve(callers_.size());
  for (uint32_t c : caller_order) {
    User user;
    user.id = std::move(callers_[c]);
    user.events = std::move(events_[c]);
    for (Event& e : user.events) {
      e.tower = tower_rank[e.tower];
      if (e.receiver != kNoReceiver) e.receiver = receiver_rank[e.receiver];
    }
    std::sort(user.events.begin(), user.events.end(), [](const Event& a, const Event& b) {
      return std::tie(a.time, a.tower, a.receiver) < std::tie(b.time, b.tower, b.receiver);
    });
    out.users_.push_back(std::move(user));
  }
  out.timezone_ = std::move(timezone);
  out.record_count_ = record_count_;

  caller_index_.clear();
  tower_index_.clear();
  receiver_index_.clear();
  callers_.clear();
  towers_.clear();
  receivers_.clear();
  events_.clear();
  record_count_ = 0;
  return out;
}

RawRecord RawDataset::Record(const User& user, const Event& event) const {
  RawRecord r;
  r.caller_id = user.id;
  if (event.receiver != kNoReceiver) r.receiver_id = receivers_[event.receiver];
  r.tower_id = towers_[event.tower];
  r.timestamp = event.time;
  return r;
}

std::vector<RawRecord> RawDataset::Records() const {
  std::vector<RawRecord> out;
  out.reserve(record_count_);
  for (const User& u : users_) {
    for (const Event& e : u.events) out.push_back(Record(u, e));
  }
  return out;
}

}  // namespace reidrisk
