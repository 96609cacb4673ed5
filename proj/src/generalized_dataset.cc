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

#include "reidrisk/generalized_dataset.h"

#include <algorithm>
#include <cctype>
#include <utility>

#include "absl/strings/str_cat.h"

namespace reidrisk {
namespace {

constexpr uint64_t PackKey(uint32_t zone, uint32_t slice) {
  return (static_cast<uint64_t>(zone) << 32) | slice;
}
constexpr uint32_t KeyZone(uint64_t key) { return static_cast<uint32_t>(key >> 32); }
constexpr uint32_t KeySlice(uint64_t key) { return static_cast<uint32_t>(key); }

}  // namespace

std::string GeneralizationProfile::Label() const {
  std::string label;
  if (!spatial_level.empty()) {
    label.push_back(static_cast<char>(
        std::toupper(static_cast<unsigned char>(spatial_level.front()))));
  }
  absl::StrAppend(&label, temporal_hours);
  return label;
}

absl::Status ValidateTemporalGranularity(int hours) {
  if (hours <= 0 || 24 % hours != 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("temporal granularity ", hours, "h does not divide 24h"));
  }
  return absl::OkStatus();
}

absl::StatusOr<GeneralizedDataset> GeneralizedDataset::FromPacked(
    GeneralizationProfile profile, std::vector<std::string> zone_names,
    std::vector<PackedUser> users) {
  if (profile.spatial_level.empty()) {
    return absl::InvalidArgumentError("profile has no spatial level");
  }
  if (absl::Status s = ValidateTemporalGranularity(profile.temporal_hours); !s.ok()) return s;
  if (users.empty()) return absl::InvalidArgumentError("dataset has no users");

  std::sort(users.begin(), users.end(),
            [](const PackedUser& a, const PackedUser& b) { return a.user_id < b.user_id; });
  for (size_t i = 0; i < users.size(); ++i) {
    if (users[i].user_id.empty()) return absl::InvalidArgumentError("empty user id");
    if (i > 0 && users[i].user_id == users[i - 1].user_id) {
      return absl::InvalidArgumentError(absl::StrCat("duplicate user id ", users[i].user_id));
    }
  }

  size_t entries = 0;
  for (PackedUser& u : users) {
    auto& kc = u.keyed_counts;
    if (kc.empty()) {
      return absl::InvalidArgumentError(absl::StrCat("user ", u.user_id, " has no points"));
    }
    std::sort(kc.begin(), kc.end());
    size_t w = 0;
    for (size_t r = 0; r < kc.size(); ++r) {
      if (KeyZone(kc[r].first) >= zone_names.size()) {
        return absl::InvalidArgumentError(
            absl::StrCat("user ", u.user_id, " references an unknown zone"));
      }
      if (w > 0 && kc[w - 1].first == kc[r].first) {
        kc[w - 1].second += kc[r].second;
      } else {
        kc[w++] = kc[r];
      }
    }
    kc.resize(w);
    entries += w;
  }

  GeneralizedDataset d;
  d.profile_ = std::move(profile);
  d.zone_names_ = std::move(zone_names);

  d.point_keys_.reserve(entries);
  for (const PackedUser& u : users) {
    for (const auto& [key, count] : u.keyed_counts) d.point_keys_.push_back(key);
  }
  std::sort(d.point_keys_.begin(), d.point_keys_.end());
  d.point_keys_.erase(std::unique(d.point_keys_.begin(), d.point_keys_.end()),
                      d.point_keys_.end());
  d.point_keys_.shrink_to_fit();

  d.user_ids_.reserve(users.size());
  d.trace_offsets_.reserve(users.size() + 1);
  d.trace_offsets_.push_back(0);
  d.trace_points_.reserve(entries);
  d.trace_counts_.reserve(entries);
  d.raw_sizes_.reserve(users.size());
  std::vector<uint64_t> posting_sizes(d.point_keys_.size() + 1, 0);
  for (PackedUser& u : users) {
    uint64_t raw = 0;
    auto from = d.point_keys_.begin();
    for (const auto& [key, count] : u.keyed_counts) {
      from = std::lower_bound(from, d.point_keys_.end(), key);
      auto id = static_cast<PointId>(from - d.point_keys_.begin());
      d.trace_points_.push_back(id);
      d.trace_counts_.push_back(count);
      ++posting_sizes[id + 1];
      raw += count;
    }
    d.trace_offsets_.push_back(d.trace_points_.size());
    d.raw_sizes_.push_back(raw);
    d.user_ids_.push_back(std::move(u.user_id));
    u.keyed_counts = {};
  }

  // Transpose. Users are visited in ascending order, so each posting list
  // comes out sorted.
  for (size_t p = 1; p < posting_sizes.size(); ++p) posting_sizes[p] += posting_sizes[p - 1];
  d.posting_offsets_ = posting_sizes;
  d.posting_users_.resize(entries);
  for (UserIndex u = 0; u < d.user_ids_.size(); ++u) {
    for (PointId p : d.trace(u)) d.posting_users_[posting_sizes[p]++] = u;
  }
  return d;
}

std::optional<UserIndex> GeneralizedDataset::FindUser(std::string_view user_id) const {
  auto it = std::lower_bound(user_ids_.begin(), user_ids_.end(), user_id);
  if (it == user_ids_.end() || *it != user_id) return std::nullopt;
  return static_cast<UserIndex>(it - user_ids_.begin());
}

Point GeneralizedDataset::point(PointId p) const {
  uint64_t key = point_keys_[p];
  return Point{zone_names_[KeyZone(key)], KeySlice(key)};
}

std::optional<PointId> GeneralizedDataset::FindPoint(const Point& point) const {
  auto zone = std::lower_bound(zone_names_.begin(), zone_names_.end(), point.zone_id);
  if (zone == zone_names_.end() || *zone != point.zone_id) return std::nullopt;
  uint64_t key = PackKey(static_cast<uint32_t>(zone - zone_names_.begin()), point.slice_index);
  auto it = std::lower_bound(point_keys_.begin(), point_keys_.end(), key);
  if (it == point_keys_.end() || *it != key) return std::nullopt;
  return static_cast<PointId>(it - point_keys_.begin());
}

UserTrace GeneralizedDataset::Trace(UserIndex u) const {
  UserTrace t;
  t.user_id = user_ids_[u];
  for (PointId p : trace(u)) t.points.push_back(point(p));
  return t;
}

std::vector<UserTrace> GeneralizedDataset::Traces() const {
  std::vector<UserTrace> out;
  out.reserve(n());
  for (UserIndex u = 0; u < n(); ++u) out.push_back(Trace(u));
  return out;
}

absl::StatusOr<GeneralizedDataset> BuildGeneralizedDataset(std::vector<UserTrace> traces,
                                                           GeneralizationProfile profile) {
  std::vector<std::string> zones;
  for (const UserTrace& t : traces) {
    for (const Point& p : t.points) zones.push_back(p.zone_id);
  }
  std::sort(zones.begin(), zones.end());
  zones.erase(std::unique(zones.begin(), zones.end()), zones.end());

  std::vector<GeneralizedDataset::PackedUser> users;
  users.reserve(traces.size());
  for (UserTrace& t : traces) {
    GeneralizedDataset::PackedUser u;
    u.user_id = std::move(t.user_id);
    for (const Point& p : t.points) {
      auto z = static_cast<uint32_t>(std::lower_bound(zones.begin(), zones.end(), p.zone_id) -
                                     zones.begin());
      u.keyed_counts.emplace_back(PackKey(z, p.slice_index), 1);
    }
    // Repeated points describe a set; keep one record each.
    std::sort(u.keyed_counts.begin(), u.keyed_counts.end());
    u.keyed_counts.erase(std::unique(u.keyed_counts.begin(), u.keyed_counts.end()),
                         u.keyed_counts.end());
    users.push_back(std::move(u));
  }
  return GeneralizedDataset::FromPacked(std::move(profile), std::move(zones), std::move(users));
}

}  // namespace reidrisk
