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

#ifndef REIDRISK_IO_UTILITY_IO_H_
#define REIDRISK_IO_UTILITY_IO_H_

#include <istream>

#include "absl/status/statusor.h"
#include "reidrisk/report.h"

namespace reidrisk::io {

// Utility CSV: spatial_level, temporal_granularity, score and optionally
// ci_low, ci_high, matched by header name. Granularity may carry an "h"
// suffix ("24h").
absl::StatusOr<UtilityTable> ParseUtilityScores(std::istream& in);

}  // namespace reidrisk::io

#endif  // REIDRISK_IO_UTILITY_IO_H_
