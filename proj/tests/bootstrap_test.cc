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

#include "reidrisk/bootstrap.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"

namespace reidrisk {
namespace {

TEST(SortedQuantileTest, LinearInterpolation) {
  std::vector<double> v = {1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(SortedQuantile(v, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(SortedQuantile(v, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(SortedQuantile(v, 1.0), 4.0);
  EXPECT_DOUBLE_EQ(SortedQuantile(v, 0.25), 1.75);
  std::vector<double> one = {7};
  EXPECT_DOUBLE_EQ(SortedQuantile(one, 0.3), 7.0);
}

TEST(BootstrapCiTest, ConstantValuesGiveDegenerateInterval) {
  for (double v : {0.1, 2.6, 1e9}) {
    std::vector<double> values(17, v);
    auto ci = BootstrapCi(values, 500, 0.05, 3);
    ASSERT_TRUE(ci.ok());
    EXPECT_EQ(*ci, (Interval{v, v}));
  }
}

TEST(BootstrapCiTest, ZeroOneValues) {
  std::vector<double> values = {0, 1, 0, 1, 0, 1, 0, 1, 0, 1};
  auto ci = BootstrapCi(values, 5000, 0.05, 1);
  ASSERT_TRUE(ci.ok());
  EXPECT_GE(ci->low, 0.0);
  EXPECT_LE(ci->high, 1.0);
  EXPECT_TRUE(ci->Contains(0.5));
  EXPECT_LT(ci->low, 0.5);
  EXPECT_GT(ci->high, 0.5);
}

// Three values have 27 equally likely resamples. At alpha = 0.2 the 10% and
// 90% quantiles of their means fall strictly inside steps of the CDF, so the
// bootstrap bounds converge to exact values.
TEST(BootstrapCiTest, MatchesExhaustiveResampleQuantiles) {
  std::vector<double> values = {1, 2, 4};
  std::vector<double> means;
  for (double a : values) {
    for (double b : values) {
      for (double c : values) means.push_back((a + b + c) / 3);
    }
  }
  std::sort(means.begin(), means.end());
  auto population_quantile = [&](double level) {
    size_t k = static_cast<size_t>(std::ceil(level * means.size()));
    return means[k - 1];
  };
  auto ci = BootstrapCi(values, 20000, 0.2, 11);
  ASSERT_TRUE(ci.ok());
  EXPECT_NEAR(ci->low, population_quantile(0.1), 1e-9);
  EXPECT_NEAR(ci->high, population_quantile(0.9), 1e-9);
}

TEST(BootstrapCiTest, DeterministicAcrossThreads) {
  std::vector<double> values;
  for (int i = 0; i < 500; ++i) values.push_back(std::sin(i) * 10);
  auto one = BootstrapCi(values, 1000, 0.05, 42, 1);
  auto many = BootstrapCi(values, 1000, 0.05, 42, 4);
  ASSERT_TRUE(one.ok() && many.ok());
  EXPECT_EQ(*one, *many);
  auto other = BootstrapCi(values, 1000, 0.05, 43, 1);
  EXPECT_NE(*one, *other);
}

TEST(BootstrapCiTest, RejectsBadArguments) {
  std::vector<double> empty;
  std::vector<double> ok = {1, 2};
  std::vector<double> nan = {1, std::nan("")};
  EXPECT_FALSE(BootstrapCi(empty).ok());
  EXPECT_FALSE(BootstrapCi(ok, 0).ok());
  EXPECT_FALSE(BootstrapCi(ok, 10, 0.0).ok());
  EXPECT_FALSE(BootstrapCi(ok, 10, 1.0).ok());
  EXPECT_FALSE(BootstrapCi(nan).ok());
}

TEST(BootstrapCisTest, EachColumnMatchesItsOwnInterval) {
  std::vector<double> a = {1, 5, 2, 8, 3, 3, 9};
  std::vector<double> b = {0.1, 0.9, 0.4, 0.4, 0.2, 0.7, 0.3};
  const std::span<const double> columns[] = {a, b};
  auto paired = BootstrapCis(columns, 500, 0.1, 11, 2);
  ASSERT_TRUE(paired.ok());
  ASSERT_EQ(paired->size(), 2u);
  EXPECT_EQ((*paired)[0], *BootstrapCi(a, 500, 0.1, 11, 1));
  EXPECT_EQ((*paired)[1], *BootstrapCi(b, 500, 0.1, 11, 1));
}

TEST(BootstrapCisTest, RejectsMismatchedColumns) {
  std::vector<double> a = {1, 2, 3};
  std::vector<double> b = {1, 2};
  const std::span<const double> columns[] = {a, b};
  EXPECT_FALSE(BootstrapCis(columns).ok());
  EXPECT_FALSE(BootstrapCis({}).ok());
}

}  // namespace
}  // namespace reidrisk
