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

#include "reidrisk/io/csv.h"

#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "reidrisk/io/timestamp_format.h"

namespace reidrisk::io {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

std::vector<std::string> Split(std::string_view line, char delim = ',') {
  std::string scratch;
  auto fields = SplitCsvLine(line, delim, scratch);
  EXPECT_TRUE(fields.ok()) << fields.status();
  return {fields->begin(), fields->end()};
}

TEST(CsvTest, SplitsPlainFields) {
  EXPECT_THAT(Split("a,b,,c"), ElementsAre("a", "b", "", "c"));
  EXPECT_THAT(Split("a;b", ';'), ElementsAre("a", "b"));
  EXPECT_THAT(Split(""), ElementsAre(""));
}

TEST(CsvTest, SplitsQuotedFields) {
  EXPECT_THAT(Split(R"("a,b","say ""hi""",c)"), ElementsAre("a,b", R"(say "hi")", "c"));
  EXPECT_THAT(Split(R"(x,"")"), ElementsAre("x", ""));
}

TEST(CsvTest, RejectsBrokenQuotes) {
  std::string scratch;
  EXPECT_FALSE(SplitCsvLine(R"("abc)", ',', scratch).ok());
  EXPECT_FALSE(SplitCsvLine(R"("a"b,c)", ',', scratch).ok());
}

TEST(CsvTest, FieldQuotingRoundTrips) {
  for (std::string v : {"plain", "a,b", R"(q"uote)", ""}) {
    EXPECT_THAT(Split(CsvField(v) + "," + CsvField("z")), ElementsAre(v, "z"));
  }
  EXPECT_EQ(CsvField("plain"), "plain");
}

TEST(CsvTest, ReaderSkipsBlankLinesAndCountsPhysicalLines) {
  std::istringstream in("h1,h2\r\n\n  \nx,y\n");
  CsvReader reader(in, ',');
  auto header = reader.Next();
  ASSERT_TRUE(header.ok() && header->has_value());
  EXPECT_EQ(reader.line(), 1);
  auto row = reader.Next();
  ASSERT_TRUE(row.ok() && row->has_value());
  EXPECT_THAT(**row, ElementsAre("x", "y"));
  EXPECT_EQ(reader.line(), 4);
  auto end = reader.Next();
  ASSERT_TRUE(end.ok());
  EXPECT_FALSE(end->has_value());
}

TEST(CsvTest, ReaderErrorsCarryLineNumber) {
  std::istringstream in("h\nok\n\"bad\n");
  CsvReader reader(in, ',');
  ASSERT_TRUE(reader.Next().ok());
  ASSERT_TRUE(reader.Next().ok());
  auto bad = reader.Next();
  ASSERT_FALSE(bad.ok());
  EXPECT_THAT(bad.status().message(), HasSubstr("line 3"));
}

TEST(CsvTest, FindColumnTrims) {
  std::vector<std::string_view> header = {"a", " b ", "c"};
  EXPECT_EQ(FindColumn(header, "b"), 1);
  EXPECT_EQ(FindColumn(header, "d"), std::nullopt);
}

TEST(TimestampFormatTest, ParsesTwoDigitYears) {
  auto f = TimestampFormat::Create("yy-MM-dd HH:mm");
  ASSERT_TRUE(f.ok());
  auto t = f->Parse("16-12-03 16:50");
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_EQ(*t, CivilToMinutes(2016, 12, 3, 16, 50));
  EXPECT_EQ(f->Format(*t), "16-12-03 16:50");
}

TEST(TimestampFormatTest, CivilConversion) {
  EXPECT_EQ(CivilToMinutes(1970, 1, 1, 0, 0), 0);
  EXPECT_EQ(CivilToMinutes(1970, 1, 2, 1, 1), kMinutesPerDay + 61);
  EXPECT_EQ(CivilToMinutes(1969, 12, 31, 23, 59), -1);
}

TEST(TimestampFormatTest, ParsesAndDropsSeconds) {
  auto f = TimestampFormat::Create("dd/MM/yyyy HH:mm:ss");
  ASSERT_TRUE(f.ok());
  auto t = f->Parse("29/02/2016 23:59:59");
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_EQ(*t, CivilToMinutes(2016, 2, 29, 23, 59));
  EXPECT_EQ(f->Format(*t), "29/02/2016 23:59:00");
}

TEST(TimestampFormatTest, RejectsBadInput) {
  auto f = TimestampFormat::Create("yyyy-MM-dd HH:mm");
  ASSERT_TRUE(f.ok());
  for (const char* bad : {"2016-13-01 00:00", "2015-02-29 10:00", "2016-01-01 24:00",
                          "2016-01-01 10:60", "2016-01-01T10:00", "2016-01-01 10:00x",
                          "2016-1-01 10:00", "", "garbage"}) {
    EXPECT_FALSE(f->Parse(bad).ok()) << bad;
  }
}

TEST(TimestampFormatTest, PatternNeedsDateAndTime) {
  EXPECT_FALSE(TimestampFormat::Create("yyyy-MM-dd").ok());
  EXPECT_FALSE(TimestampFormat::Create("HH:mm").ok());
  EXPECT_TRUE(TimestampFormat::Create("yyyyMMddHHmm").ok());
}

}  // namespace
}  // namespace reidrisk::io
