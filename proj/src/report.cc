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

#include "reidrisk/report.h"

#include <cmath>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"

namespace reidrisk {
namespace {

bool SameProfile(const GeneralizationProfile& a, const GeneralizationProfile& b) {
  return a.temporal_hours == b.temporal_hours &&
         absl::EqualsIgnoreCase(a.spatial_level, b.spatial_level);
}

bool InUtilityRange(double x) {
  return std::isfinite(x) && x >= kMinUtility && x <= kMaxUtility;
}

}  // namespace

absl::Status UtilityTable::Add(GeneralizationProfile profile, UtilityScore score) {
  if (!InUtilityRange(score.mean)) {
    return absl::OutOfRangeError(absl::StrCat("utility score ", score.mean, " for ",
                                              profile.Label(), " outside [1, 10]"));
  }
  if (score.ci_low.has_value() != score.ci_high.has_value()) {
    return absl::InvalidArgumentError(
        absl::StrCat("utility for ", profile.Label(), " has only one CI bound"));
  }
  if (score.ci_low && (!InUtilityRange(*score.ci_low) || !InUtilityRange(*score.ci_high) ||
                       *score.ci_low > score.mean || score.mean > *score.ci_high)) {
    return absl::OutOfRangeError(absl::StrCat(
        "utility CI for ", profile.Label(), " is not an interval within [1, 10] around the mean"));
  }
  if (Find(profile) != nullptr) {
    return absl::InvalidArgumentError(
        absl::StrCat("duplicate utility entry for ", profile.Label()));
  }
  entries_.push_back({std::move(profile), score});
  return absl::OkStatus();
}

const UtilityScore* UtilityTable::Find(const GeneralizationProfile& profile) const {
  for (const Entry& e : entries_) {
    if (SameProfile(e.profile, profile)) return &e.score;
  }
  return nullptr;
}

absl::StatusOr<AssessmentReport> BuildReport(
    std::vector<RiskMetrics> metrics, const UtilityTable* utilities, bool pareto,
    ReidentConfig config, std::vector<std::pair<std::string, std::string>> inputs) {
  if (pareto && utilities == nullptr) {
    return absl::InvalidArgumentError("Pareto analysis requires utility scores");
  }
  AssessmentReport report;
  report.config = std::move(config);
  report.inputs = std::move(inputs);
  for (RiskMetrics& m : metrics) {
    ReportRow row;
    if (utilities != nullptr) {
      if (const UtilityScore* u = utilities->Find(m.profile)) {
        row.utility = *u;
      } else if (pareto) {
        return absl::NotFoundError(absl::StrCat("no utility for ", m.profile.Label()));
      }
    }
    row.metrics = std::move(m);
    report.rows.push_back(std::move(row));
  }
  if (pareto) {
    ParetoSection section;
    for (const ReportRow& row : report.rows) {
      if (!row.metrics.r) {
        return absl::FailedPreconditionError(absl::StrCat(
            "no information ratio for ", row.metrics.profile.Label(),
            " (every user censored)"));
      }
      section.points.push_back({row.metrics.profile, row.utility->mean, *row.metrics.r});
    }
    section.partition = ParetoFront(section.points);
    report.pareto = std::move(section);
  }
  return report;
}

}  // namespace reidrisk
