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

#include "reidrisk/hierarchy.h"
#include "reidrisk/strings.h"

#include <algorithm>
#include <map>
#include <utility>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"

namespace reidrisk {

absl::StatusOr<SpatialHierarchy> SpatialHierarchy::Create(std::vector<std::string> levels,
                                                           std::vector<Row> rows) {
  if (levels.empty()) return absl::InvalidArgumentError("hierarchy has no levels");
  for (size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].empty()) return absl::InvalidArgumentError("empty level name");
    for (size_t j = 0; j < i; ++j) {
      if (absl::EqualsIgnoreCase(levels[i], levels[j])) {
        return absl::InvalidArgumentError(absl::StrCat("duplicate level '", levels[i], "'"));
      }
    }
  }
  if (rows.empty()) return absl::InvalidArgumentError("hierarchy has no towers");

  // tower -> zones, rejecting inconsistent repeats.
  std::map<std::string, std::vector<std::string>> by_tower;
  for (Row& row : rows) {
    if (row.tower_id.empty()) return absl::InvalidArgumentError("empty tower id");
    if (row.zones.size() != levels.size()) {
      return absl::InvalidArgumentError(absl::StrCat("tower ", row.tower_id, " has ",
                                                     row.zones.size(), " zones, expected ",
                                                     levels.size()));
    }
    for (size_t l = 0; l < levels.size(); ++l) {
      if (row.zones[l].empty()) {
        return absl::InvalidArgumentError(
            absl::StrCat("tower ", row.tower_id, " unmapped at ", levels[l]));
      }
    }
    auto [it, inserted] = by_tower.try_emplace(row.tower_id, row.zones);
    if (!inserted && it->second != row.zones) {
      return absl::InvalidArgumentError(
          absl::StrCat("tower ", row.tower_id, " mapped inconsistently"));
    }
  }

  // Nesting: zone at level l determines zone at level l+1. Checking adjacent
  // levels suffices since the relation composes.
  for (size_t l = 0; l + 1 < levels.size(); ++l) {
    std::map<std::string_view, std::pair<std::string_view, std::string_view>> parent;
    for (const auto& [tower, zones] : by_tower) {
      auto [it, inserted] = parent.try_emplace(zones[l], zones[l + 1], tower);
      if (!inserted && it->second.first != zones[l + 1]) {
        return absl::InvalidArgumentError(absl::StrCat(
            "nesting violation: towers ", AsAbsl(it->second.second), " and ", tower, " share ",
            levels[l], " zone ", zones[l], " but differ at ", levels[l + 1], " (",
            AsAbsl(it->second.first), " vs ", zones[l + 1], ")"));
      }
    }
  }

  SpatialHierarchy h;
  h.levels_ = std::move(levels);
  h.zones_.resize(h.levels_.size());
  h.tower_zone_.resize(h.levels_.size());
  h.towers_.reserve(by_tower.size());
  for (const auto& [tower, zones] : by_tower) h.towers_.push_back(tower);
  for (uint32_t t = 0; t < h.towers_.size(); ++t) h.tower_lookup_.emplace(h.towers_[t], t);

  for (size_t l = 0; l < h.levels_.size(); ++l) {
    std::vector<std::string>& names = h.zones_[l];
    for (const auto& [tower, zones] : by_tower) names.push_back(zones[l]);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    h.tower_zone_[l].reserve(h.towers_.size());
    for (const auto& [tower, zones] : by_tower) {
      auto pos = std::lower_bound(names.begin(), names.end(), zones[l]);
      h.tower_zone_[l].push_back(static_cast<uint32_t>(pos - names.begin()));
    }
  }
  return h;
}

std::optional<size_t> SpatialHierarchy::FindLevel(std::string_view name) const {
  for (size_t l = 0; l < levels_.size(); ++l) {
    if (absl::EqualsIgnoreCase(levels_[l], AsAbsl(name))) return l;
  }
  return std::nullopt;
}

std::optional<uint32_t> SpatialHierarchy::FindTower(std::string_view tower_id) const {
  auto it = tower_lookup_.find(AsAbsl(tower_id));
  if (it == tower_lookup_.end()) return std::nullopt;
  return it->second;
}

absl::StatusOr<std::string_view> SpatialHierarchy::ZoneOf(std::string_view tower_id,
                                                          std::string_view level) const {
  std::optional<size_t> l = FindLevel(level);
  if (!l) return absl::InvalidArgumentError(absl::StrCat("unknown spatial level '", AsAbsl(level), "'"));
  std::optional<uint32_t> t = FindTower(tower_id);
  if (!t) return absl::NotFoundError(absl::StrCat(AsAbsl(tower_id), " unmapped at ", AsAbsl(level)));
  return std::string_view(zones_[*l][tower_zone_[*l][*t]]);
}

std::vector<SpatialHierarchy::Row> SpatialHierarchy::Rows() const {
  std::vector<Row> rows;
  rows.reserve(towers_.size());
  for (uint32_t t = 0; t < towers_.size(); ++t) {
    Row row;
    row.tower_id = towers_[t];
    for (size_t l = 0; l < levels_.size(); ++l) {
      row.zones.push_back(zones_[l][tower_zone_[l][t]]);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace reidrisk
