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

#include "reidrisk/io/cdr_io.h"

#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "reidrisk/io/timestamp_format.h"

namespace reidrisk::io {
namespace {

using ::testing::HasSubstr;

absl::StatusOr<RawDataset> Parse(const std::string& text, CdrSchemaConfig schema = {}) {
  std::istringstream in(text);
  return ParseCdr(in, schema);
}

TEST(CdrIoTest, ParsesTableRowWithTwoDigitYear) {
  CdrSchemaConfig schema;
  schema.time_format = "yy-MM-dd HH:mm";
  auto d = Parse(
      "caller_id,receiver_id,tower_id,time\n"
      "299C20B41B32B5GH76C343,AEA595D43E2C9EE20EC12R,768,16-12-03 16:50\n",
      schema);
  ASSERT_TRUE(d.ok()) << d.status();
  std::vector<RawRecord> records = d->Records();
  ASSERT_EQ(records.size(), 1);
  EXPECT_EQ(records[0], (RawRecord{"299C20B41B32B5GH76C343", "AEA595D43E2C9EE20EC12R", "768",
                                   CivilToMinutes(2016, 12, 3, 16, 50)}));
  EXPECT_EQ(d->period_start(), CivilToMinutes(2016, 12, 3, 0, 0));
  EXPECT_EQ(d->period_end(), CivilToMinutes(2016, 12, 4, 0, 0));
}

TEST(CdrIoTest, MalformedTimeNamesLine) {
  auto d = Parse(
      "caller_id,tower_id,time\n"
      "u1,t1,2016-12-03 1650\n"
      "u2,t1,2016-12-03 16:51\n");
  ASSERT_FALSE(d.ok());
  EXPECT_THAT(d.status().message(), HasSubstr("line 2"));
}

TEST(CdrIoTest, MissingFieldNamesLine) {
  auto d = Parse(
      "caller_id,tower_id,time\n"
      "u1,t1,2016-12-03 16:50\n"
      "u2,,2016-12-03 16:51\n");
  ASSERT_FALSE(d.ok());
  EXPECT_THAT(d.status().message(), HasSubstr("line 3"));
  EXPECT_THAT(d.status().message(), HasSubstr("tower"));

  auto short_row = Parse("caller_id,tower_id,time\nu1,t1\n");
  ASSERT_FALSE(short_row.ok());
  EXPECT_THAT(short_row.status().message(), HasSubstr("line 2"));
}

TEST(CdrIoTest, EmptyInputIsAnError) {
  EXPECT_FALSE(Parse("").ok());
  EXPECT_FALSE(Parse("caller_id,tower_id,time\n").ok());
}

TEST(CdrIoTest, MissingRequiredColumn) {
  auto d = Parse("caller_id,time\nu1,2016-12-03 16:50\n");
  ASSERT_FALSE(d.ok());
  EXPECT_THAT(d.status().message(), HasSubstr("tower_id"));
}

TEST(CdrIoTest, ReceiverColumnIsOptional) {
  auto d = Parse("time,tower_id,caller_id\n2016-12-03 16:50,t1,u1\n");
  ASSERT_TRUE(d.ok()) << d.status();
  EXPECT_EQ(d->Records()[0].receiver_id, std::nullopt);
  EXPECT_EQ(d->Records()[0].tower_id, "t1");
}

TEST(CdrIoTest, CustomSchemaByIndexAndDelimiter) {
  CdrSchemaConfig schema;
  schema.caller = {"", 2};
  schema.tower = {"cell", std::nullopt};
  schema.time = {"nonexistent", 0};
  schema.receiver = {"", std::nullopt};
  schema.delimiter = ';';
  schema.time_format = "dd.MM.yyyy HH:mm";
  schema.timezone = "Europe/Rome";
  auto d = Parse("when;cell;who\n03.12.2016 16:50;c9;alice\n", schema);
  ASSERT_TRUE(d.ok()) << d.status();
  EXPECT_EQ(d->Records()[0],
            (RawRecord{"alice", std::nullopt, "c9", CivilToMinutes(2016, 12, 3, 16, 50)}));
  EXPECT_EQ(d->timezone(), "Europe/Rome");
}

TEST(CdrIoTest, ColumnsMustBeDistinct) {
  CdrSchemaConfig schema;
  schema.tower = {"caller_id", std::nullopt};
  EXPECT_FALSE(Parse("caller_id,time\nu1,2016-12-03 16:50\n", schema).ok());
}

TEST(CdrIoTest, WriteThenParseRoundTrips) {
  auto d = Parse(
      "caller_id,receiver_id,tower_id,time\n"
      "u2,u1,\"t,1\",2016-12-03 16:50\n"
      "u1,,t2,2016-12-04 00:00\n"
      "u1,u2,t2,2016-12-03 09:15\n");
  ASSERT_TRUE(d.ok()) << d.status();
  std::ostringstream out;
  ASSERT_TRUE(WriteCdr(out, *d).ok());
  auto again = Parse(out.str());
  ASSERT_TRUE(again.ok()) << again.status();
  EXPECT_EQ(again->Records(), d->Records());
  std::ostringstream out2;
  ASSERT_TRUE(WriteCdr(out2, *again).ok());
  EXPECT_EQ(out2.str(), out.str());
}

}  // namespace
}  // namespace reidrisk::io
