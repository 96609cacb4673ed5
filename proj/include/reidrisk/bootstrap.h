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

#ifndef REIDRISK_BOOTSTRAP_H_
#define REIDRISK_BOOTSTRAP_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace reidrisk {

struct Interval {
  double low = 0.0;
  double high = 0.0;

  bool Contains(double x) const { return low <= x && x <= high; }
  bool Overlaps(const Interval& o) const { return low <= o.high && o.low <= high; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Linear-interpolation quantile (Hyndman-Fan type 7) of sorted data.
double SortedQuantile(std::span<const double> sorted, double q);

// Percentile-bootstrap interval for the mean of `values`: `resamples` means
// of size-n resamples drawn with replacement, then their alpha/2 and
// 1 - alpha/2 quantiles. Resample b draws from its own sub-seed, so the
// result is identical for any `threads`.
absl::StatusOr<Interval> BootstrapCi(std::span<const double> values, int resamples = 1000,
                                     double alpha = 0.05, uint64_t seed = 0, int threads = 1);

// Paired intervals for several statistics of the same units: columns[j][i]
// is statistic j of unit i. Every resample draws one set of units for all
// columns. A single column gives exactly BootstrapCi.
absl::StatusOr<std::vector<Interval>> BootstrapCis(
    std::span<const std::span<const double>> columns, int resamples = 1000,
    double alpha = 0.05, uint64_t seed = 0, int threads = 1);

}  // namespace reidrisk

#endif  // REIDRISK_BOOTSTRAP_H_
