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

#include "absl/strings/str_cat.h"
#include "reidrisk/parallel.h"
#include "reidrisk/random.h"

namespace reidrisk {

double SortedQuantile(std::span<const double> sorted, double q) {
  if (sorted.size() == 1) return sorted.front();
  double h = (static_cast<double>(sorted.size()) - 1.0) * q;
  auto lo = static_cast<size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

absl::StatusOr<Interval> BootstrapCi(std::span<const double> values, int resamples,
                                     double alpha, uint64_t seed, int threads) {
  const std::span<const double> columns[] = {values};
  absl::StatusOr<std::vector<Interval>> out =
      BootstrapCis(columns, resamples, alpha, seed, threads);
  if (!out.ok()) return out.status();
  return out->front();
}

absl::StatusOr<std::vector<Interval>> BootstrapCis(
    std::span<const std::span<const double>> columns, int resamples, double alpha,
    uint64_t seed, int threads) {
  if (columns.empty()) return absl::InvalidArgumentError("bootstrap of no statistics");
  const size_t n = columns.front().size();
  if (n == 0) return absl::InvalidArgumentError("bootstrap of an empty sample");
  if (resamples < 1) {
    return absl::InvalidArgumentError(absl::StrCat("resample count ", resamples, " < 1"));
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat("alpha ", alpha, " outside (0, 1)"));
  }
  const size_t k = columns.size();
  // Row-major copy so one draw reads one cache line.
  std::vector<double> rows(n * k);
  for (size_t j = 0; j < k; ++j) {
    if (columns[j].size() != n) {
      return absl::InvalidArgumentError("bootstrap columns differ in length");
    }
    for (size_t i = 0; i < n; ++i) {
      if (!std::isfinite(columns[j][i])) {
        return absl::InvalidArgumentError("non-finite bootstrap value");
      }
      rows[i * k + j] = columns[j][i];
    }
  }

  const auto count = static_cast<size_t>(resamples);
  std::vector<double> means(count * k);
  ParallelFor(count, threads, 16, [&](size_t begin, size_t end) {
    std::vector<double> sums(k);
    for (size_t b = begin; b < end; ++b) {
      Rng rng(SubSeed(seed, Stream::kBootstrap, 0, b));
      std::fill(sums.begin(), sums.end(), 0.0);
      for (size_t i = 0; i < n; ++i) {
        const double* row = &rows[rng.UniformIndex(n) * k];
        for (size_t j = 0; j < k; ++j) sums[j] += row[j];
      }
      for (size_t j = 0; j < k; ++j) means[j * count + b] = sums[j] / static_cast<double>(n);
    }
  });

  std::vector<Interval> out;
  out.reserve(k);
  for (size_t j = 0; j < k; ++j) {
    // Clamp against rounding drift so constant samples give exact intervals.
    const auto [min_it, max_it] = std::minmax_element(columns[j].begin(), columns[j].end());
    std::span<double> sorted(&means[j * count], count);
    for (double& x : sorted) x = std::clamp(x, *min_it, *max_it);
    std::sort(sorted.begin(), sorted.end());
    out.push_back({SortedQuantile(sorted, alpha / 2.0), SortedQuantile(sorted, 1.0 - alpha / 2.0)});
  }
  return out;
}

}  // namespace reidrisk
