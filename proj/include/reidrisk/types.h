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

#ifndef REIDRISK_TYPES_H_
#define REIDRISK_TYPES_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"

namespace reidrisk {

// Minutes since 1970-01-01T00:00 on the dataset's local wall clock. All
// timestamps of a dataset share one declared timezone, so civil arithmetic on
// this value (day boundaries, slice boundaries) is local calendar arithmetic.
using LocalMinutes = int64_t;

inline constexpr int64_t kMinutesPerHour = 60;
inline constexpr int64_t kMinutesPerDay = 24 * kMinutesPerHour;

// Start of the local calendar day containing `t`.
constexpr LocalMinutes FloorToDay(LocalMinutes t) {
  int64_t day = t / kMinutesPerDay;
  if (t % kMinutesPerDay < 0) --day;
  return day * kMinutesPerDay;
}

// Dense indexes into a GeneralizedDataset. User indexes follow lexicographic
// user_id order; point ids follow (zone_id, slice_index) order.
using UserIndex = uint32_t;
using PointId = uint32_t;

// One CDR row. Only the caller contributes location points; the receiver is
// carried along for completeness.
struct RawRecord {
  std::string caller_id;
  std::optional<std::string> receiver_id;
  std::string tower_id;
  LocalMinutes timestamp = 0;

  friend auto operator<=>(const RawRecord&, const RawRecord&) = default;
};

// One cell of the generalization grid, e.g. ("zip", 6) for ZIP x 6h.
struct GeneralizationProfile {
  std::string spatial_level;
  int temporal_hours = 1;

  // Short display name: upper-cased first letter of the level plus the slice
  // length in hours ("Z1", "D12", "M24").
  std::string Label() const;

  friend bool operator==(const GeneralizationProfile&,
                         const GeneralizationProfile&) = default;
};

// Slice lengths must be a positive divisor of 24 hours so that every slice
// boundary falls on the same wall-clock hours each day.
absl::Status ValidateTemporalGranularity(int hours);

// A generalized spatio-temporal unit.
struct Point {
  std::string zone_id;
  uint32_t slice_index = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

// A user's distinct generalized points. The points need not be sorted or
// unique on input; the dataset builder normalizes them.
struct UserTrace {
  std::string user_id;
  std::vector<Point> points;

  size_t size() const { return points.size(); }
  friend bool operator==(const UserTrace&, const UserTrace&) = default;
};

// Auxiliary knowledge about one target user: a few of that user's own points.
struct AuxPoints {
  UserIndex user = 0;
  std::vector<PointId> points;
};

}  // namespace reidrisk

#endif  // REIDRISK_TYPES_H_
