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

#include "reidrisk/io/utility_io.h"

#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace reidrisk::io {
namespace {

using ::testing::HasSubstr;

absl::StatusOr<UtilityTable> Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseUtilityScores(in);
}

TEST(UtilityIoTest, ParsesScores) {
  auto t = Parse(
      "spatial_level,temporal_granularity,score\n"
      "ZIP,1,9.3\n"
      "Municipality,24h,4.0\n");
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_EQ(t->size(), 2);
  const UtilityScore* z1 = t->Find({"zip", 1});
  ASSERT_NE(z1, nullptr);
  EXPECT_DOUBLE_EQ(z1->mean, 9.3);
  EXPECT_EQ(z1->ci_low, std::nullopt);
  const UtilityScore* m24 = t->Find({"municipality", 24});
  ASSERT_NE(m24, nullptr);
  EXPECT_DOUBLE_EQ(m24->mean, 4.0);
  EXPECT_EQ(t->Find({"zip", 24}), nullptr);
}

TEST(UtilityIoTest, ParsesOptionalInterval) {
  auto t = Parse(
      "spatial_level,temporal_granularity,score,ci_low,ci_high\n"
      "zip,6,8.0,7.5,8.5\n"
      "zip,12,7.0,,\n");
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_EQ(t->Find({"zip", 6})->ci_low, 7.5);
  EXPECT_EQ(t->Find({"zip", 6})->ci_high, 8.5);
  EXPECT_EQ(t->Find({"zip", 12})->ci_high, std::nullopt);
}

TEST(UtilityIoTest, ScoreOutOfRange) {
  auto t = Parse("spatial_level,temporal_granularity,score\nZIP,1,11\n");
  ASSERT_FALSE(t.ok());
  EXPECT_EQ(t.status().code(), absl::StatusCode::kOutOfRange);
  EXPECT_THAT(t.status().message(), HasSubstr("line 2"));
  EXPECT_FALSE(Parse("spatial_level,temporal_granularity,score\nZIP,1,0.5\n").ok());
  EXPECT_FALSE(Parse("spatial_level,temporal_granularity,score,ci_low,ci_high\n"
                     "ZIP,1,5,6,7\n")
                   .ok());
}

TEST(UtilityIoTest, DuplicateProfile) {
  auto t = Parse("spatial_level,temporal_granularity,score\nZIP,1,9\nzip,1h,8\n");
  ASSERT_FALSE(t.ok());
  EXPECT_THAT(t.status().message(), HasSubstr("line 3"));
}

TEST(UtilityIoTest, MalformedRows) {
  EXPECT_FALSE(Parse("").ok());
  EXPECT_FALSE(Parse("level,hours,score\nzip,1,9\n").ok());
  EXPECT_FALSE(Parse("spatial_level,temporal_granularity,score\nzip,five,9\n").ok());
  EXPECT_FALSE(Parse("spatial_level,temporal_granularity,score\nzip,5,9\n").ok());
  EXPECT_FALSE(Parse("spatial_level,temporal_granularity,score\nzip,1,high\n").ok());
  EXPECT_FALSE(Parse("spatial_level,temporal_granularity,score\n,1,9\n").ok());
  EXPECT_FALSE(Parse("spatial_level,temporal_granularity,score\nzip,1,\n").ok());
}

}  // namespace
}  // namespace reidrisk::io
