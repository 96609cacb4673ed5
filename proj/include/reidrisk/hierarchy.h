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

#ifndef REIDRISK_HIERARCHY_H_
#define REIDRISK_HIERARCHY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"

namespace reidrisk {

// Nested tower -> zone mappings, one per named spatial level, ordered from
// finest to coarsest. Every tower is mapped at every level, and two towers
// sharing a zone at some level share a zone at every coarser level.
class SpatialHierarchy {
 public:
  struct Row {
    std::string tower_id;
    std::vector<std::string> zones;  // one per level, finest first

    friend bool operator==(const Row&, const Row&) = default;
  };

  // Validates totality, consistency of repeated towers and nesting. Rows for
  // the same tower may repeat if they agree.
  static absl::StatusOr<SpatialHierarchy> Create(std::vector<std::string> levels,
                                                 std::vector<Row> rows);

  SpatialHierarchy() = default;

  const std::vector<std::string>& levels() const { return levels_; }
  size_t level_count() const { return levels_.size(); }
  // Case-insensitive level lookup.
  std::optional<size_t> FindLevel(std::string_view name) const;

  // Towers sorted lexicographically.
  const std::vector<std::string>& towers() const { return towers_; }
  std::optional<uint32_t> FindTower(std::string_view tower_id) const;

  // Zone names at a level, sorted lexicographically.
  const std::vector<std::string>& zones(size_t level) const { return zones_[level]; }
  uint32_t zone_index(size_t level, uint32_t tower) const { return tower_zone_[level][tower]; }

  absl::StatusOr<std::string_view> ZoneOf(std::string_view tower_id,
                                          std::string_view level) const;

  std::vector<Row> Rows() const;

 private:
  std::vector<std::string> levels_;
  std::vector<std::string> towers_;
  absl::flat_hash_map<std::string, uint32_t> tower_lookup_;
  std::vector<std::vector<std::string>> zones_;
  std::vector<std::vector<uint32_t>> tower_zone_;  // [level][tower] -> zone index
};

}  // namespace reidrisk

#endif  // REIDRISK_HIERARCHY_H_
