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

#ifndef REIDRISK_GENERALIZE_H_
#define REIDRISK_GENERALIZE_H_

#include <cstdint>
#include <string_view>

#include "absl/status/statusor.h"
#include "reidrisk/generalized_dataset.h"
#include "reidrisk/hierarchy.h"
#include "reidrisk/raw_dataset.h"
#include "reidrisk/types.h"

namespace reidrisk {

// Zone containing `tower_id` at `level`.
absl::StatusOr<std::string_view> GeneralizeSpatial(std::string_view tower_id,
                                                   std::string_view level,
                                                   const SpatialHierarchy& hierarchy);

// Ordinal of the time slice containing `t`. Slices are `granularity_hours`
// long and aligned to local midnight of the day holding `period_start`, so
// 6h slices are [00-06), [06-12), [12-18), [18-24) each day.
absl::StatusOr<uint32_t> GeneralizeTemporal(LocalMinutes t, int granularity_hours,
                                            LocalMinutes period_start);

// Generalized point of one record under `profile`.
absl::StatusOr<Point> GeneralizeRecord(std::string_view tower_id, LocalMinutes t,
                                       const GeneralizationProfile& profile,
                                       const SpatialHierarchy& hierarchy,
                                       LocalMinutes period_start);

// Checks the level exists in `hierarchy` and the slice length divides 24h.
// Returns the profile with the level spelled as in the hierarchy.
absl::StatusOr<GeneralizationProfile> ResolveProfile(const GeneralizationProfile& profile,
                                                     const SpatialHierarchy& hierarchy);

// D_g: each user's records mapped to points and de-duplicated. Any record on
// a tower the hierarchy does not map fails the whole call. Users are mapped
// concurrently on `threads` workers; the result does not depend on it.
absl::StatusOr<GeneralizedDataset> GeneralizeDataset(const RawDataset& raw,
                                                     const GeneralizationProfile& profile,
                                                     const SpatialHierarchy& hierarchy,
                                                     int threads = 1);

}  // namespace reidrisk

#endif  // REIDRISK_GENERALIZE_H_
