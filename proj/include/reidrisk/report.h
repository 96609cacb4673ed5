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

#ifndef REIDRISK_REPORT_H_
#define REIDRISK_REPORT_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "reidrisk/pareto.h"
#include "reidrisk/reident.h"
#include "reidrisk/types.h"

namespace reidrisk {

inline constexpr double kMinUtility = 1.0;
inline constexpr double kMaxUtility = 10.0;

// Mean expert usefulness score of one profile, on [1, 10].
struct UtilityScore {
  double mean = 0.0;
  std::optional<double> ci_low;
  std::optional<double> ci_high;

  friend bool operator==(const UtilityScore&, const UtilityScore&) = default;
};

// Utility scores keyed by profile. Level names match case-insensitively.
class UtilityTable {
 public:
  struct Entry {
    GeneralizationProfile profile;
    UtilityScore score;
  };

  // Rejects scores outside [1, 10] and a second entry for a profile.
  absl::Status Add(GeneralizationProfile profile, UtilityScore score);
  const UtilityScore* Find(const GeneralizationProfile& profile) const;

  const std::vector<Entry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

 private:
  std::vector<Entry> entries_;
};

struct ReportRow {
  RiskMetrics metrics;
  std::optional<UtilityScore> utility;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ParetoSection {
  std::vector<ParetoPoint> points;  // parallel to the report rows
  ParetoPartition partition;

  friend bool operator==(const ParetoSection&, const ParetoSection&) = default;
};

struct AssessmentReport {
  ReidentConfig config;
  // Provenance of the run, e.g. {"cdr", "calls.csv"}. Kept in insertion order.
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<ReportRow> rows;
  std::optional<ParetoSection> pareto;

  friend bool operator==(const AssessmentReport&, const AssessmentReport&) = default;
};

// Bundles per-profile metrics with their utility scores (when a table is
// given) and, if `pareto` is set, the privacy-utility partition. Pareto
// analysis needs a utility and an information ratio for every profile.
absl::StatusOr<AssessmentReport> BuildReport(
    std::vector<RiskMetrics> metrics, const UtilityTable* utilities, bool pareto,
    ReidentConfig config, std::vector<std::pair<std::string, std::string>> inputs = {});

}  // namespace reidrisk

#endif  // REIDRISK_REPORT_H_
