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

#ifndef REIDRISK_SYNTHGEN_H_
#define REIDRISK_SYNTHGEN_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "reidrisk/hierarchy.h"
#include "reidrisk/raw_dataset.h"

namespace reidrisk {

// Synthetic CDR generator. Each user has a home tower and k anchor towers
// near it (in tower-number order, which the hierarchy groups into contiguous
// zones), visits anchors with Zipf-distributed frequency, makes a
// log-normally distributed number of calls spread uniformly over the days of
// the period, and calls at hours drawn from a diurnal profile.
struct SynthConfig {
  uint64_t n_users = 1000;
  uint32_t n_towers = 2130;
  // Zone counts per level, finest first; each must not exceed the previous
  // one (or n_towers for the first).
  std::vector<std::string> level_names = {"zip", "district", "municipality"};
  std::vector<uint32_t> zone_counts = {2130, 156, 56};
  uint32_t period_days = 30;
  // Calendar date of the first day.
  int start_year = 2013;
  unsigned start_month = 3;
  unsigned start_day = 1;

  // Calls per user: max(1, round(LogNormal(ln(median), sigma))).
  double calls_median = 40.0;
  double calls_sigma = 0.8;

  uint32_t anchors = 5;
  double zipf_exponent = 1.0;
  // Anchors other than home lie within this many tower numbers of it.
  uint32_t anchor_radius = 40;

  // Relative call intensity per local hour.
  std::array<double, 24> diurnal = {0.15, 0.08, 0.05, 0.04, 0.05, 0.15, 0.40, 0.75,
                                    1.00, 1.10, 1.15, 1.20, 1.25, 1.20, 1.15, 1.15,
                                    1.20, 1.30, 1.40, 1.35, 1.15, 0.90, 0.60, 0.30};

  std::string timezone = "UTC";
  uint64_t seed = 0;
};

absl::Status ValidateSynthConfig(const SynthConfig& config);

struct SynthOutput {
  RawDataset raw;
  SpatialHierarchy hierarchy;
};

// Deterministic in `config` (including the seed) for any `threads`.
absl::StatusOr<SynthOutput> Generate(const SynthConfig& config, int threads = 1);

}  // namespace reidrisk

#endif  // REIDRISK_SYNTHGEN_H_
