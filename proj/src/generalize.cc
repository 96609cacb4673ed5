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

#include "reidrisk/generalize.h"

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "reidrisk/parallel.h"

namespace reidrisk {

absl::StatusOr<std::string_view> GeneralizeSpatial(std::string_view tower_id,
                                                   std::string_view level,
                                                   const SpatialHierarchy& hierarchy) {
  return hierarchy.ZoneOf(tower_id, level);
}

absl::StatusOr<uint32_t> GeneralizeTemporal(LocalMinutes t, int granularity_hours,
                                            LocalMinutes period_start) {
  if (absl::Status s = ValidateTemporalGranularity(granularity_hours); !s.ok()) return s;
  if (t < period_start) {
    return absl::InvalidArgumentError(
        absl::StrCat("timestamp ", t, " precedes period start ", period_start));
  }
  int64_t slice = (t - FloorToDay(period_start)) / (granularity_hours * kMinutesPerHour);
  if (slice > std::numeric_limits<uint32_t>::max()) {
    return absl::OutOfRangeError("time slice index overflows");
  }
  return static_cast<uint32_t>(slice);
}

absl::StatusOr<Point> GeneralizeRecord(std::string_view tower_id, LocalMinutes t,
                                       const GeneralizationProfile& profile,
                                       const SpatialHierarchy& hierarchy,
                                       LocalMinutes period_start) {
  absl::StatusOr<std::string_view> zone =
      GeneralizeSpatial(tower_id, profile.spatial_level, hierarchy);
  if (!zone.ok()) return zone.status();
  absl::StatusOr<uint32_t> slice = GeneralizeTemporal(t, profile.temporal_hours, period_start);
  if (!slice.ok()) return slice.status();
  return Point{std::string(*zone), *slice};
}

absl::StatusOr<GeneralizationProfile> ResolveProfile(const GeneralizationProfile& profile,
                                                     const SpatialHierarchy& hierarchy) {
  std::optional<size_t> level = hierarchy.FindLevel(profile.spatial_level);
  if (!level) {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown spatial level '", profile.spatial_level, "'"));
  }
  if (absl::Status s = ValidateTemporalGranularity(profile.temporal_hours); !s.ok()) return s;
  return GeneralizationProfile{hierarchy.levels()[*level], profile.temporal_hours};
}

absl::StatusOr<GeneralizedDataset> GeneralizeDataset(const RawDataset& raw,
                                                     const GeneralizationProfile& profile,
                                                     const SpatialHierarchy& hierarchy,
                                                     int threads) {
  absl::StatusOr<GeneralizationProfile> resolved = ResolveProfile(profile, hierarchy);
  if (!resolved.ok()) return resolved.status();
  const size_t level = *hierarchy.FindLevel(resolved->spatial_level);

  // Raw tower dictionary -> zone index at this level.
  std::vector<uint32_t> tower_zone(raw.towers().size());
  for (size_t t = 0; t < raw.towers().size(); ++t) {
    std::optional<uint32_t> h = hierarchy.FindTower(raw.towers()[t]);
    if (!h) {
      return absl::NotFoundError(
          absl::StrCat(raw.towers()[t], " unmapped at ", profile.spatial_level));
    }
    tower_zone[t] = hierarchy.zone_index(level, *h);
  }

  const LocalMinutes anchor = FloorToDay(raw.period_start());
  const int64_t slice_minutes = resolved->temporal_hours * kMinutesPerHour;
  if (raw.period_end() - anchor > slice_minutes * int64_t{std::numeric_limits<uint32_t>::max()}) {
    return absl::OutOfRangeError("dataset period too long for slice indexing");
  }

  const auto& users = raw.users();
  std::vector<GeneralizedDataset::PackedUser> packed(users.size());
  ParallelFor(users.size(), threads, 256, [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      GeneralizedDataset::PackedUser& out = packed[i];
      out.user_id = users[i].id;
      out.keyed_counts.reserve(users[i].events.size());
      for (const RawDataset::Event& e : users[i].events) {
        auto slice = static_cast<uint64_t>((e.time - anchor) / slice_minutes);
        uint64_t key = (static_cast<uint64_t>(tower_zone[e.tower]) << 32) | slice;
        out.keyed_counts.emplace_back(key, 1);
      }
    }
  });
  return GeneralizedDataset::FromPacked(*std::move(resolved),
                                        hierarchy.zones(level), std::move(packed));
}

}  // namespace reidrisk
