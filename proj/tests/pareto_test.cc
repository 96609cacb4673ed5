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

#include "reidrisk/pareto.h"

#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace reidrisk {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

ParetoPoint P(std::string level, int hours, double utility, double privacy) {
  return {{std::move(level), hours}, utility, privacy};
}

TEST(ParetoFrontTest, ExtremesAreBothNondominated) {
  std::vector<ParetoPoint> pts = {P("zip", 1, 9.3, 0.07), P("municipality", 24, 4.0, 0.51)};
  ParetoPartition part = ParetoFront(pts);
  EXPECT_THAT(part.nondominated, ElementsAre(0, 1));
  EXPECT_THAT(part.dominated, IsEmpty());
}

TEST(ParetoFrontTest, EqualUtilityLowerRatioIsDominated) {
  std::vector<ParetoPoint> pts = {P("municipality", 24, 4.0, 0.51),
                                  P("district", 24, 4.0, 0.29)};
  ParetoPartition part = ParetoFront(pts);
  EXPECT_THAT(part.nondominated, ElementsAre(0));
  EXPECT_THAT(part.dominated, ElementsAre(DominatedEntry{1, 0}));
}

TEST(ParetoFrontTest, Singleton) {
  std::vector<ParetoPoint> pts = {P("zip", 1, 5, 0.5)};
  EXPECT_THAT(ParetoFront(pts).nondominated, ElementsAre(0));
}

TEST(ParetoFrontTest, TiesDoNotDominate) {
  std::vector<ParetoPoint> pts = {P("zip", 1, 5, 0.5), P("zip", 6, 5, 0.5)};
  EXPECT_THAT(ParetoFront(pts).nondominated, ElementsAre(0, 1));
  EXPECT_FALSE(Dominates(pts[0], pts[1]));
}

TEST(ParetoFrontTest, WitnessHasHighestUtility) {
  std::vector<ParetoPoint> pts = {P("a", 1, 2, 0.9), P("b", 1, 8, 0.4), P("c", 1, 1, 0.1)};
  ParetoPartition part = ParetoFront(pts);
  EXPECT_THAT(part.nondominated, ElementsAre(0, 1));
  EXPECT_THAT(part.dominated, ElementsAre(DominatedEntry{2, 1}));
}

TEST(ParetoFrontTest, MatchesPairwiseDefinition) {
  std::mt19937_64 gen(4);
  for (int round = 0; round < 200; ++round) {
    std::vector<ParetoPoint> pts;
    size_t n = 1 + gen() % 12;
    for (size_t i = 0; i < n; ++i) {
      pts.push_back(P("zip", 1, 1 + static_cast<double>(gen() % 5),
                      static_cast<double>(gen() % 5) / 10));
    }
    ParetoPartition part = ParetoFront(pts);
    std::vector<bool> on_front(n, false);
    for (size_t i : part.nondominated) on_front[i] = true;
    EXPECT_EQ(part.nondominated.size() + part.dominated.size(), n);
    for (size_t i = 0; i < n; ++i) {
      bool dominated = false;
      for (size_t j = 0; j < n; ++j) {
        dominated |= pts[j].utility >= pts[i].utility && pts[j].privacy >= pts[i].privacy &&
                     (pts[j].utility > pts[i].utility || pts[j].privacy > pts[i].privacy);
      }
      EXPECT_EQ(on_front[i], !dominated);
    }
    for (const DominatedEntry& d : part.dominated) {
      EXPECT_TRUE(on_front[d.dominator]);
      EXPECT_TRUE(Dominates(pts[d.dominator], pts[d.index]));
    }
  }
}

}  // namespace
}  // namespace reidrisk
