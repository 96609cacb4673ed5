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

#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace reidrisk {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

const std::vector<std::string> kLevels = {"zip", "district", "municipality"};

TEST(SpatialHierarchyTest, ConsistentNestingIsAccepted) {
  auto h = SpatialHierarchy::Create(kLevels, {{"t1", {"z1", "d1", "m1"}},
                                              {"t2", {"z1", "d1", "m1"}},
                                              {"t3", {"z2", "d1", "m1"}}});
  ASSERT_TRUE(h.ok()) << h.status();
  EXPECT_EQ(h->level_count(), 3);
  EXPECT_THAT(h->towers(), ElementsAre("t1", "t2", "t3"));
  EXPECT_THAT(h->zones(0), ElementsAre("z1", "z2"));
  EXPECT_THAT(h->zones(2), ElementsAre("m1"));
  EXPECT_EQ(h->zone_index(0, *h->FindTower("t3")), 1);
  EXPECT_EQ(*h->ZoneOf("t3", "district"), "d1");
}

TEST(SpatialHierarchyTest, NestingViolationNamesTowers) {
  auto h = SpatialHierarchy::Create(kLevels,
                                    {{"t1", {"z1", "d1", "m1"}}, {"t2", {"z1", "d2", "m1"}}});
  ASSERT_FALSE(h.ok());
  EXPECT_THAT(h.status().message(), HasSubstr("nesting violation"));
  EXPECT_THAT(h.status().message(), HasSubstr("t1"));
  EXPECT_THAT(h.status().message(), HasSubstr("t2"));
}

TEST(SpatialHierarchyTest, ViolationAtCoarserLevelIsCaught) {
  auto h = SpatialHierarchy::Create(kLevels,
                                    {{"t1", {"z1", "d1", "m1"}}, {"t2", {"z2", "d1", "m2"}}});
  EXPECT_FALSE(h.ok());
}

TEST(SpatialHierarchyTest, RepeatedTowerRows) {
  EXPECT_TRUE(SpatialHierarchy::Create(kLevels, {{"t1", {"z1", "d1", "m1"}},
                                                 {"t1", {"z1", "d1", "m1"}}})
                  .ok());
  auto h = SpatialHierarchy::Create(kLevels,
                                    {{"t1", {"z1", "d1", "m1"}}, {"t1", {"z2", "d1", "m1"}}});
  ASSERT_FALSE(h.ok());
  EXPECT_THAT(h.status().message(), HasSubstr("t1"));
}

TEST(SpatialHierarchyTest, RejectsMalformedInput) {
  EXPECT_FALSE(SpatialHierarchy::Create({}, {{"t1", {}}}).ok());
  EXPECT_FALSE(SpatialHierarchy::Create(kLevels, {}).ok());
  EXPECT_FALSE(SpatialHierarchy::Create({"zip", "ZIP"}, {{"t1", {"a", "a"}}}).ok());
  EXPECT_FALSE(SpatialHierarchy::Create(kLevels, {{"t1", {"z1", "d1"}}}).ok());
  EXPECT_FALSE(SpatialHierarchy::Create(kLevels, {{"t1", {"z1", "", "m1"}}}).ok());
  EXPECT_FALSE(SpatialHierarchy::Create(kLevels, {{"", {"z1", "d1", "m1"}}}).ok());
}

TEST(SpatialHierarchyTest, LevelLookupIgnoresCase) {
  auto h = SpatialHierarchy::Create({"ZIP", "Municipality"}, {{"t1", {"z1", "m1"}}});
  ASSERT_TRUE(h.ok());
  EXPECT_EQ(h->FindLevel("zip"), 0);
  EXPECT_EQ(h->FindLevel("MUNICIPALITY"), 1);
  EXPECT_EQ(h->FindLevel("district"), std::nullopt);
}

TEST(SpatialHierarchyTest, ZoneOfErrors) {
  auto h = SpatialHierarchy::Create(kLevels, {{"t1", {"z1", "d1", "m1"}}});
  ASSERT_TRUE(h.ok());
  auto missing = h->ZoneOf("t9", "ZIP");
  ASSERT_FALSE(missing.ok());
  EXPECT_EQ(missing.status().message(), "t9 unmapped at ZIP");
  EXPECT_FALSE(h->ZoneOf("t1", "county").ok());
}

TEST(SpatialHierarchyTest, RowsRoundTrip) {
  std::vector<SpatialHierarchy::Row> rows = {{"t2", {"z1", "d1", "m1"}},
                                             {"t1", {"z2", "d1", "m1"}}};
  auto h = SpatialHierarchy::Create(kLevels, rows);
  ASSERT_TRUE(h.ok());
  auto again = SpatialHierarchy::Create(kLevels, h->Rows());
  ASSERT_TRUE(again.ok());
  EXPECT_EQ(again->Rows(), h->Rows());
  EXPECT_EQ(h->Rows().front().tower_id, "t1");
}

}  // namespace
}  // namespace reidrisk
