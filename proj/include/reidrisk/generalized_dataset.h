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

#ifndef REIDRISK_GENERALIZED_DATASET_H_
#define REIDRISK_GENERALIZED_DATASET_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "reidrisk/types.h"

namespace reidrisk {

// A generalized dataset: per-user sets of distinct points and the inverted
// point -> users index, both in compressed-row form.
//
// Users are numbered in lexicographic user_id order and points in
// (zone_id, slice_index) order, so every trace and every posting list is a
// sorted run of dense integers. Instances are immutable and may be shared
// by any number of concurrent readers.
class GeneralizedDataset {
 public:
  // Builder input for the fast path used by generalization: zones are
  // referred to by index into a sorted, de-duplicated name table.
  struct PackedUser {
    std::string user_id;
    // (zone index << 32 | slice) keys with the raw record count behind each.
    // Need not be sorted or unique.
    std::vector<std::pair<uint64_t, uint32_t>> keyed_counts;
  };

  static absl::StatusOr<GeneralizedDataset> FromPacked(GeneralizationProfile profile,
                                                       std::vector<std::string> zone_names,
                                                       std::vector<PackedUser> users);

  GeneralizedDataset() = default;

  const GeneralizationProfile& profile() const { return profile_; }
  // Number of users, n.
  size_t n() const { return user_ids_.size(); }
  size_t point_count() const { return point_keys_.size(); }
  // Sum of trace sizes (distinct (user, point) pairs).
  size_t entry_count() const { return trace_points_.size(); }

  const std::string& user_id(UserIndex u) const { return user_ids_[u]; }
  std::optional<UserIndex> FindUser(std::string_view user_id) const;

  Point point(PointId p) const;
  std::optional<PointId> FindPoint(const Point& point) const;

  // Distinct points of a user, ascending.
  std::span<const PointId> trace(UserIndex u) const {
    return {trace_points_.data() + trace_offsets_[u],
            trace_points_.data() + trace_offsets_[u + 1]};
  }
  // Raw record count behind each trace point (parallel to trace()).
  std::span<const uint32_t> multiplicity(UserIndex u) const {
    return {trace_counts_.data() + trace_offsets_[u],
            trace_counts_.data() + trace_offsets_[u + 1]};
  }
  uint32_t trace_size(UserIndex u) const {
    return static_cast<uint32_t>(trace_offsets_[u + 1] - trace_offsets_[u]);
  }
  uint64_t raw_size(UserIndex u) const { return raw_sizes_[u]; }

  // Users holding a point, ascending.
  std::span<const UserIndex> posting(PointId p) const {
    return {posting_users_.data() + posting_offsets_[p],
            posting_users_.data() + posting_offsets_[p + 1]};
  }

  // String-level views, mainly for tests and reports.
  std::vector<UserTrace> Traces() const;
  UserTrace Trace(UserIndex u) const;

 private:
  GeneralizationProfile profile_;
  std::vector<std::string> zone_names_;
  std::vector<std::string> user_ids_;
  std::vector<uint64_t> point_keys_;  // sorted; index is the PointId
  std::vector<uint64_t> trace_offsets_;
  std::vector<PointId> trace_points_;
  std::vector<uint32_t> trace_counts_;
  std::vector<uint64_t> raw_sizes_;
  std::vector<uint64_t> posting_offsets_;
  std::vector<UserIndex> posting_users_;
};

// Builds the indexed form from string-level traces. Duplicate points within
// a trace collapse; each surviving point counts as one record.
absl::StatusOr<GeneralizedDataset> BuildGeneralizedDataset(std::vector<UserTrace> traces,
                                                           GeneralizationProfile profile);

}  // namespace reidrisk

#endif  // REIDRISK_GENERALIZED_DATASET_H_
